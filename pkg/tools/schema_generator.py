#!/usr/bin/env python3
"""
Schema Generator Tool for bracetree

Writes JSON Schema documents for every JSON payload the command line
emits, generated from the pydantic models in bracetree.reports.
"""
import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Type

from pydantic import BaseModel

project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from bracetree.config import LOG_FORMAT
from bracetree.reports import (
    AxiomReport,
    EnumerationPayload,
    FreenessReport,
    ProductPayload,
    SeriesPayload,
)

logger = logging.getLogger(__name__)

SCHEMA_VERSION = "1.0.0"

MODELS: Dict[str, Type[BaseModel]] = {
    "series": SeriesPayload,
    "freeness_report": FreenessReport,
    "axiom_report": AxiomReport,
    "enumeration": EnumerationPayload,
    "product": ProductPayload,
}


def load_schema(schema_path: str) -> Dict[str, Any]:
    """Load schema from JSON file."""
    with open(schema_path, "r") as f:
        return json.load(f)


def build_schema(name: str, model: Type[BaseModel]) -> Dict[str, Any]:
    """JSON Schema of a payload model as it is serialized."""
    schema = model.model_json_schema(mode="serialization")
    schema["$id"] = f"bracetree/{name}.json"
    schema["version"] = SCHEMA_VERSION
    return schema


def render(schema: Dict[str, Any]) -> str:
    return json.dumps(schema, indent=2, sort_keys=True) + "\n"


def generate_schemas(output_dir: Path) -> List[Path]:
    """Write one schema file per payload model and return the paths."""
    output_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for name, model in MODELS.items():
        path = output_dir / f"{name}.json"
        path.write_text(render(build_schema(name, model)))
        logger.info(f"Wrote {path}")
        written.append(path)
    return written


def stale_schemas(output_dir: Path) -> List[str]:
    """Names of schema files that are missing or differ from the models."""
    stale = []
    for name, model in MODELS.items():
        path = output_dir / f"{name}.json"
        if not path.exists() or path.read_text() != render(build_schema(name, model)):
            stale.append(name)
    return stale


def main():
    parser = argparse.ArgumentParser(description="Generate JSON schemas from the payload models")
    parser.add_argument("--output-dir", default="schemas", help="Output directory for schema files")
    parser.add_argument(
        "--check", action="store_true", help="Fail if the schema files are out of date"
    )
    args = parser.parse_args()

    logging.basicConfig(level=logging.INFO, format=LOG_FORMAT)
    output_dir = Path(args.output_dir)

    if args.check:
        stale = stale_schemas(output_dir)
        if stale:
            logger.error(f"Out of date schemas: {', '.join(stale)}")
            sys.exit(1)
        logger.info("All schemas are up to date")
        return

    written = generate_schemas(output_dir)
    print(f"Generated {len(written)} schemas in {output_dir}/")
    for path in written:
        print(f"  - {path.name}")


if __name__ == "__main__":
    main()

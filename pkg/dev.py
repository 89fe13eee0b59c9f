#!/usr/bin/env python3
"""
Development helper script for bracetree
"""
import subprocess
import sys

def run_command(cmd, description="", check=True):
    """Run a shell command and print status"""
    print(f"🔧 {description}...")
    try:
        result = subprocess.run(cmd, shell=True, check=check, capture_output=True, text=True)
        if result.returncode == 0:
            print(f"✅ {description} completed")
            if result.stdout:
                print(result.stdout)
            return True
        else:
            print(f"❌ {description} failed")
            if result.stderr:
                print(result.stderr)
            return False
    except subprocess.CalledProcessError as e:
        print(f"❌ {description} failed: {e}")
        if e.stdout:
            print(e.stdout)
        return False

def main():
    """Main development script"""
    import argparse

    parser = argparse.ArgumentParser(description="bracetree Development Helper")
    parser.add_argument("command", choices=[
        "setup", "build", "test", "test-basic", "lint", "schema-gen", "clean"
    ], help="Command to run")
    parser.add_argument("--slow", action="store_true", help="Include slow freeness and axiom runs")

    args = parser.parse_args()

    print(f"🚀 bracetree Development Helper")
    print(f"Running: {args.command}")
    print("-" * 40)

    success = True
    if args.command == "setup":
        success &= run_command("python3 -m venv venv", "Creating virtual environment")
        success &= run_command("./venv/bin/pip install -r requirements.txt", "Installing dependencies")
        if success:
            print("\n🎉 Setup complete! Activate venv with: source venv/bin/activate")

    elif args.command == "build":
        success &= run_command("python3 -m compileall -q bracetree tools", "Compiling package")
        success &= run_command("python3 tools/schema_generator.py", "Generating schema files")
        if success:
            print("\n✅ Build successful")

    elif args.command == "test":
        marker = "" if args.slow else ' -m "not slow"'
        success = run_command(f"python3 -m pytest tests/{marker} --cov=bracetree", "Running test suite")
        if success:
            print("\n🎉 Tests passed!")

    elif args.command == "test-basic":
        success = run_command("python3 test_basic.py", "Running basic tests")
        if success:
            print("\n🎉 Basic tests passed!")

    elif args.command == "lint":
        success &= run_command("python3 -m black --check bracetree tools tests", "Checking formatting")
        success &= run_command("python3 -m isort --check-only bracetree tools tests", "Checking imports")
        success &= run_command("python3 -m mypy bracetree tools", "Type checking")

    elif args.command == "schema-gen":
        success = run_command("python3 tools/schema_generator.py", "Generating schema files")
        if success:
            print("\n📋 Schema files generated in schemas/")

    elif args.command == "clean":
        success &= run_command("rm -rf schemas .pytest_cache .hypothesis htmlcov", "Cleaning generated files")
        success &= run_command("find . -name __pycache__ -prune -exec rm -rf {} +", "Removing bytecode caches")
        if success:
            print("\n🧹 Cleanup complete")

    return 0 if success else 1

if __name__ == "__main__":
    sys.exit(main())

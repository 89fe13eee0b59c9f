from bracetree.main import main

main()

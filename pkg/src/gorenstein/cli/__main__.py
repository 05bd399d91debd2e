from gorenstein.cli.main import main

main()

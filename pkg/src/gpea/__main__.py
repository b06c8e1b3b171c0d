from gpea.cli import main

main()

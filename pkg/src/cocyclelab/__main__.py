from cocyclelab.cli import main

main()

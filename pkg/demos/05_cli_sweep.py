"""Drive the command line tool: a small sweep table and a constructed relation."""

from wlpci.cli import main

main(["sweep", "--p", "3,5", "--n", "4", "--d", "6"])
main(["construct", "frobenius-general", "--p", "3", "--n", "5", "--d", "4", "--l", "0", "--verify"])
main(["classify", "--p", "7", "--n", "4", "--d", "11"])

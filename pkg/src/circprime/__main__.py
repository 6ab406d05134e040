from circprime.cli import run

run()

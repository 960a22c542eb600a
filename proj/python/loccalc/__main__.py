import sys

from . import run_cli

status, output = run_cli(sys.argv[1:])
sys.stdout.write(output)
sys.exit(status)

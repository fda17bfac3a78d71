"""Regenerates the oracle values and compares them with the frozen file."""

import json
import pathlib
import subprocess
import sys

here = pathlib.Path(__file__).parent
frozen = json.loads(pathlib.Path(sys.argv[1]).read_text())
fresh = json.loads(subprocess.check_output([sys.executable, str(here / "generate.py")]))
if fresh != frozen:
    for key in sorted(set(fresh) | set(frozen)):
        if fresh.get(key) != frozen.get(key):
            print("differs:", key)
    sys.exit(1)
print("frozen oracle values reproduce")

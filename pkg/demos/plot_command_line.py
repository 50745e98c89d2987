"""
Driving the command-line tool
=============================

The ``k4t`` command wraps the library.  ``main`` takes an argument list and
returns the exit code, so the same calls can be made from Python.
"""

import contextlib
import io
import json
import tempfile
from pathlib import Path

from k4t.cli import main


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


###############################################################################
# Build a graph and save it as JSON.

workdir = Path(tempfile.mkdtemp())
graph_file = workdir / "binary.json"
code, _, err = run("build", "((((()())(()()))(()())))", "-o", str(graph_file))
print("build exit", code, "|", err.strip())

###############################################################################
# Reconstruct from the file.

code, out, _ = run("reconstruct", str(graph_file))
doc = json.loads(out)
print("reconstruct exit", code, "| core tree", doc["coreTree"], "| degrees", doc["degrees"])

###############################################################################
# Roundtrip checks and failure codes.

print("roundtrip exit", run("roundtrip", "(((()())(()())))")[0])
print("bad tree exit", run("build", "(()")[0])
print("single-core exit", run("roundtrip", "((()()))")[0])

"""Writing an algebra to a document and analysing it from the command line.

Run: python3 demos/06_files_and_cli.py
"""
import tempfile
from pathlib import Path

from grsuper import builtin, io
from grsuper.cli import RunConfig, run

with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "osp_sl2.json"
    path.write_text(io.serialize(builtin("EX2+EX1")))
    back = io.load(path)
    print("round trip equal:", back.structurally_equal(builtin("EX2+EX1")))

    for command in ("validate", "connections", "decompose"):
        status, out = run(RunConfig(command, input_path=str(path)))
        print(f"\n$ grsuper --command {command} --input {path.name}   (exit {status})")
        print(out)

status, out = run(RunConfig("decompose", builtin="EX5", format="structured"))
print(f"\n$ grsuper --command decompose --builtin EX5 --format structured   (exit {status})")
print(out)

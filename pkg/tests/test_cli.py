import json
import subprocess
import sys
from pathlib import Path

import pytest

from grsuper import builtin_names
from grsuper.cli import COMMANDS, RunConfig, main, run

FIXTURES = Path(__file__).parent / "fixtures"


def structured(command, **kw):
    status, out = run(RunConfig(command, format="structured", **kw))
    return status, json.loads(out)


def test_decompose_sl2_pair():
    status, out = run(RunConfig("decompose", builtin="EX3"))
    assert status == 0
    assert "gr-simple components K: 2" in out
    status, d = structured("decompose", builtin="EX3")
    assert [c["kind"] for c in d["simple_components"]] == ["GrSimple", "GrSimple"]


def test_decompose_central_extension_exits_2():
    status, d = structured("decompose", builtin="EX5")
    assert status == 2
    assert d["witnesses"]["center_zero"] == ["z"]
    status, out = run(RunConfig("decompose", builtin="EX5"))
    assert status == 2 and "center_zero: z" in out


def test_validate_corrupted_fixture_exits_3():
    path = str(FIXTURES / "ex1_corrupted.json")
    status, d = structured("validate", input_path=path)
    assert status == 3 and not d["valid"]
    assert ["h", "e", "f"] in [v["witness"] for v in d["violations"] if v["kind"] == "jacobi"]
    for command in COMMANDS:
        assert run(RunConfig(command, input_path=path))[0] == 3


def test_input_errors_exit_1():
    assert run(RunConfig("validate", builtin="NOPE"))[0] == 1
    assert run(RunConfig("validate", input_path="/nonexistent/alg.json"))[0] == 1
    status, out = run(RunConfig("validate", input_path=str(FIXTURES / "zero_denominator.json")))
    assert status == 1 and "zero denominator" in out


def test_run_config_invariants():
    with pytest.raises(ValueError):
        RunConfig("validate")
    with pytest.raises(ValueError):
        RunConfig("validate", input_path="a", builtin="EX1")
    with pytest.raises(ValueError):
        RunConfig("analyze", builtin="EX1")
    with pytest.raises(ValueError):
        RunConfig("validate", builtin="EX1", oracle_depth=0)


@pytest.mark.parametrize("name", builtin_names())
def test_connections_output_equals_oracle(name):
    status, d = structured("connections", builtin=name)
    assert status == 0 and d["agree"] and d["oracle_complete"]
    assert sorted(d["classes"]) == sorted(d["oracle_partition"])


def test_short_oracle_depth_is_reported_not_failed():
    # EX2 needs chains of length 2; depth 1 finds only g ~ g^-1
    status, d = structured("connections", builtin="EX2", oracle_depth=1)
    assert status == 0 and not d["agree"] and not d["oracle_complete"]


def test_support_and_ideals_sections():
    status, d = structured("support", builtin="EX2")
    assert status == 0 and d["sigma_odd"] == [[-1], [1]]
    status, d = structured("ideals", builtin="EX5")
    assert status == 0 and d["u_complement"]["dim"] == 1


@pytest.mark.parametrize("name", builtin_names())
def test_report_is_byte_identical(name):
    a = run(RunConfig("report", builtin=name, format="structured"))
    b = run(RunConfig("report", builtin=name, format="structured"))
    assert a == b
    assert run(RunConfig("report", builtin=name)) == run(RunConfig("report", builtin=name))


def test_report_status_is_most_severe_section():
    assert run(RunConfig("report", builtin="EX5"))[0] == 2
    assert run(RunConfig("report", builtin="EX2+EX1"))[0] == 0
    assert run(RunConfig("report", input_path=str(FIXTURES / "ex1_corrupted.json")))[0] == 3


def test_main_and_usage_errors(capsys):
    assert main(["--command", "decompose", "--builtin", "EX1"]) == 0
    assert "gr-simple components K: 1" in capsys.readouterr().out
    with pytest.raises(SystemExit) as info:
        main(["--command", "validate"])
    assert info.value.code == 1
    with pytest.raises(SystemExit) as info:
        main(["--command", "validate", "--builtin", "EX1", "--input", "x.json"])
    assert info.value.code == 1


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "grsuper", "--command", "decompose", "--builtin", "EX5"],
                          capture_output=True, text=True)
    assert proc.returncode == 2 and "center_zero: z" in proc.stdout

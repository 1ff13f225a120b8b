import io

import pytest

import main
from app.cli import list_presets, parse_args, run
from app.storage import CSV_COLUMNS, read_csv
from app.topologies import ScenarioKind, TopologyKind

SMALL = ["--iters", "1", "--frame-len", "10"]


def test_fig2_preset_expands():
	spec = parse_args(["--preset", "fig2"])
	assert spec.topology is TopologyKind.X
	assert spec.cells == [(16, (15, 5))]
	assert spec.scenarios == list(ScenarioKind)
	assert spec.snr_grid == [float(v) for v in range(0, 27, 2)]
	assert spec.iterations == 200
	configs = spec.configs()
	assert len(configs) == 5
	assert [c.rs for c in configs] == [None, (15, 5), None, (15, 5), (15, 5)]


def test_full_profile_and_flag_overrides():
	spec = parse_args(["--preset", "fig3-x", "--full", "--m", "16", "--seed", "9"])
	assert spec.iterations == 1000
	assert spec.cells == [(16, (15, 5))]
	assert spec.scenarios == [ScenarioKind.NCC_RS_SCHEME1, ScenarioKind.NCC_RS_SCHEME2]
	assert spec.seed == 9


def test_butterfly_scheme2_32psk():
	spec = parse_args(["--topology", "butterfly", "--scheme", "2", "--m", "32", "--rs", "31,10"])
	assert spec.topology is TopologyKind.BUTTERFLY
	assert spec.scenarios == [ScenarioKind.NCC_RS_SCHEME2]
	assert spec.cells == [(32, (31, 10))]


@pytest.mark.parametrize(
	"extra",
	[[], ["--scenario", "ncc"], ["--scenario", "direct"], ["--scenario", "direct", "--scenario", "ncc"]],
)
def test_field_order_mismatch_exits_2(capsys, extra):
	with pytest.raises(SystemExit) as exc:
		parse_args(["--m", "16", "--rs", "7,2", *extra])
	assert exc.value.code == 2
	assert "field order mismatch" in capsys.readouterr().err


def test_mismatched_rs_fails_uncoded_run(tmp_path):
	with pytest.raises(SystemExit) as exc:
		main.main(["run", "--m", "16", "--rs", "7,2", "--scenario", "ncc", *SMALL, "--snr", "5", "--out", str(tmp_path / "r.csv")])
	assert exc.value.code == 2
	assert not (tmp_path / "r.csv").exists()


@pytest.mark.parametrize(
	"argv",
	[["--bogus"], ["--rs", "15"], ["--snr-step", "0"], ["--m", "12"], ["--iters", "0"], ["--topology", "ring"]],
)
def test_bad_flags_exit_2(argv):
	with pytest.raises(SystemExit) as exc:
		parse_args(argv)
	assert exc.value.code == 2


def test_single_snr_point():
	spec = parse_args(["--snr", "10", "--scenario", "ncc", "--scenario", "scheme1"])
	assert spec.snr_grid == [10.0]
	assert spec.scenarios == [ScenarioKind.NCC_UNCODED, ScenarioKind.NCC_RS_SCHEME1]


def test_run_writes_one_row_per_point(tmp_path):
	out = tmp_path / "fig2.csv"
	spec = parse_args(["--preset", "fig2", *SMALL, "--out", str(out)])
	buf = io.StringIO()
	assert run(spec, out=buf) == 0
	header = out.read_text(encoding="utf-8").splitlines()[0]
	assert header == ",".join(CSV_COLUMNS)
	rows = read_csv(out)
	assert len(rows) == 70
	assert {r["scenario"] for r in rows} == {s.value for s in ScenarioKind}
	assert all(r["iterations"] == 1 and r["seed"] == spec.seed for r in rows)
	summary = buf.getvalue()
	assert "Wrote 70 rows" in summary
	assert "throughput_gain=4/3" in summary
	assert "outage=" in summary


def test_rerun_is_byte_identical(tmp_path):
	a, b = tmp_path / "a.csv", tmp_path / "b.csv"
	for path in (a, b):
		spec = parse_args(["--topology", "ext-x", "--scheme", "1", "--m", "8", *SMALL, "--snr", "0,10", "--out", str(path)])
		assert run(spec, out=io.StringIO()) == 0
	assert a.read_bytes() == b.read_bytes()


def test_json_output(tmp_path):
	out = tmp_path / "r.json"
	spec = parse_args(["--scenario", "direct", "--m", "8", *SMALL, "--snr", "5", "--format", "json", "--out", str(out)])
	assert run(spec, out=io.StringIO()) == 0
	assert '"columns"' in out.read_text(encoding="utf-8")


def test_default_output_location(tmp_path, monkeypatch):
	monkeypatch.setenv("NCC_SIM_OUTPUT_DIR", str(tmp_path / "results"))
	spec = parse_args(["--preset", "fig4-butterfly", "--m", "8", *SMALL, "--snr", "0"])
	assert run(spec, out=io.StringIO()) == 0
	assert (tmp_path / "results" / "fig4-butterfly.csv").exists()


def test_unwritable_output_exits_1(tmp_path, capsys):
	blocker = tmp_path / "file.txt"
	blocker.write_text("x", encoding="utf-8")
	spec = parse_args(["--scenario", "direct", "--m", "8", *SMALL, "--snr", "0", "--out", str(blocker / "out.csv")])
	assert run(spec, out=io.StringIO()) == 1
	assert "cannot write" in capsys.readouterr().err


def test_list_presets_table():
	text = list_presets()
	for name in ("fig2", "fig3-x", "fig3-extx", "fig4-butterfly", "fig4-extbutterfly"):
		assert name in text
	assert "4/3" in text and "3/2" in text and "8/5" in text


def test_main_subcommands(capsys, tmp_path):
	assert main.main(["list-presets"]) == 0
	assert "fig2" in capsys.readouterr().out
	assert main.main(["metrics", "--pairs", "6"]) == 0
	assert "12/7" in capsys.readouterr().out
	assert main.main(["outage", "--p1", "0.1", "--p2", "0.1", "--pr", "0.1", "--trials", "1000", "--seed", "1"]) == 0
	assert "outage=0.028" in capsys.readouterr().out
	out = tmp_path / "run.csv"
	assert main.main(["run", "--scenario", "ncc", "--m", "8", *SMALL, "--snr", "3", "--out", str(out)]) == 0
	assert len(read_csv(out)) == 1


def test_main_outage_rejects_bad_rate():
	with pytest.raises(SystemExit) as exc:
		main.main(["outage", "--p1", "1.5", "--p2", "0.1", "--pr", "0.1"])
	assert exc.value.code == 2

"""End-to-end tests of the command-line interface."""

import io
import json
import subprocess
import sys

import pytest

from stanley_paths.cli import SequenceReport, main, render

# golden sequences, as printed in the totals' own tests
STD_TOTAL_12 = "1 1 2 3 5 9 16 30 55 105 196 378"


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ------------------------------------------------------------------ series

def test_series_total_plain(capsys):
    code, out, _ = run_cli(
        capsys, "series", "std", "--what", "total", "--order", "12",
        "--format", "plain",
    )
    assert code == 0
    assert out == STD_TOTAL_12 + "\n"


def test_series_h0_bfile(capsys):
    code, out, _ = run_cli(
        capsys, "series", "std", "--what", "h0", "--order", "6",
        "--format", "bfile",
    )
    assert code == 0
    assert out == "0 0\n1 0\n2 1\n3 0\n4 1\n5 0\n"


def test_series_bfile_offset(capsys):
    code, out, _ = run_cli(
        capsys, "series", "std", "--what", "r2", "--order", "4",
        "--format", "bfile", "--offset", "1",
    )
    assert code == 0
    assert out == "1 0\n2 1\n3 0\n4 1\n"


def test_series_skew_total_csv(capsys):
    code, out, _ = run_cli(
        capsys, "series", "skew", "--what", "total", "--order", "4",
        "--format", "csv",
    )
    assert code == 0
    assert out == "n,value\n0,1\n1,1\n2,2\n3,3\n"


def test_series_json_roundtrip(capsys):
    code, out, _ = run_cli(
        capsys, "series", "skew", "--what", "r2", "--order", "40",
        "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["name"] == "skew-r2"
    assert payload["variant"] == "skew"
    assert payload["method"] == "closedform"
    assert payload["order"] == 40
    from stanley_paths.skew import r2_skew

    assert payload["values"] == r2_skew(40).integer_coefficients()


def test_series_level_slice(capsys):
    code, out, _ = run_cli(
        capsys, "series", "std", "--what", "level", "--layer", "G",
        "--level", "0", "--order", "5",
    )
    assert code == 0
    assert out == "1 0 0 0 0\n"


def test_series_level_requires_layer_and_level(capsys):
    code, _, err = run_cli(capsys, "series", "std", "--what", "level")
    assert code == 2


def test_series_rejects_skew_only_names_for_std(capsys):
    code, _, _ = run_cli(capsys, "series", "std", "--what", "e1")
    assert code == 2


def test_series_rejects_f_level_zero(capsys):
    code, _, _ = run_cli(
        capsys, "series", "std", "--what", "level", "--layer", "F",
        "--level", "0",
    )
    assert code == 2


def test_series_rejects_unknown_format(capsys):
    code, _, _ = run_cli(
        capsys, "series", "std", "--what", "r2", "--format", "xml",
    )
    assert code == 2


# ---------------------------------------------------------------------- dp

def test_dp_single_state_sequence(capsys):
    # counts at (G, 2) for lengths 0..4 were listed by hand: UU at length 2,
    # then UDUU and UUDU at length 4
    code, out, _ = run_cli(
        capsys, "dp", "std", "--max-len", "4", "--state", "G:2",
    )
    assert code == 0
    assert out == "0 0 1 0 2\n"


def test_dp_table_plain(capsys):
    code, out, _ = run_cli(capsys, "dp", "std", "--max-len", "2")
    assert code == 0
    assert out.splitlines() == [
        "0 G:0 1",
        "1 G:1 1",
        "2 G:2 1",
        "2 H:0 1",
    ]


def test_dp_table_csv(capsys):
    code, out, _ = run_cli(
        capsys, "dp", "skew", "--max-len", "2", "--format", "csv",
    )
    assert code == 0
    assert out == "n,layer,level,count\n0,G,0,1\n1,G,1,1\n2,G,2,1\n2,H,0,1\n"


def test_dp_table_rejects_bfile(capsys):
    code, _, _ = run_cli(
        capsys, "dp", "std", "--max-len", "2", "--format", "bfile",
    )
    assert code == 2


def test_dp_rejects_bad_state(capsys):
    code, _, _ = run_cli(
        capsys, "dp", "std", "--max-len", "2", "--state", "K:0",
    )
    assert code == 2


# --------------------------------------------------------------- enumerate

def test_enumerate_figure_count(capsys):
    code, out, _ = run_cli(
        capsys, "enumerate", "std", "--len", "8", "--state", "H:0",
    )
    assert code == 0
    assert out == "5\n"


def test_enumerate_listing_with_dead_end_flag(capsys):
    code, out, _ = run_cli(
        capsys, "enumerate", "skew", "--len", "6", "--state", "K:0", "--list",
    )
    assert code == 0
    assert out == "2\nUUUDDR\nUUUDRR\n"
    code, out, _ = run_cli(capsys, "enumerate", "skew", "--len", "7", "--list")
    assert code == 0
    assert "E:1 " in out and "(dead end)" in out


def test_enumerate_totals_line(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "std", "--len", "2")
    assert code == 0
    assert out == "G:2 1\nH:0 1\ntotal 2\n"


def test_enumerate_cap_violation_is_usage_error(capsys):
    code, _, _ = run_cli(capsys, "enumerate", "skew", "--len", "15")
    assert code == 2


def test_enumerate_cap_override_warns(capsys):
    code, out, err = run_cli(
        capsys, "enumerate", "skew", "--len", "15", "--exhaustive-cap", "15",
    )
    assert code == 0
    assert "warning" in err
    from stanley_paths.oracle import dp_counts

    assert out.splitlines()[-1] == f"total {dp_counts('skew', 15).total(15)}"


# ---------------------------------------------------------------- validate

def test_validate_single_word(capsys):
    code, out, _ = run_cli(capsys, "validate", "std", "U D U D")
    assert code == 0
    assert out == "valid UDUD -> H:0\n"


def test_validate_invalid_word_reports_position(capsys):
    code, out, _ = run_cli(capsys, "validate", "std", "UUDD")
    assert code == 0
    assert out.startswith("invalid UUDD at 3:")


def test_validate_stdin(capsys, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO("UDUD\nuudd\n\nUUUDDR\n"))
    code, out, _ = run_cli(capsys, "validate", "skew", "--stdin")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "valid UDUD -> H:0"
    assert lines[1].startswith("invalid UUDD at 3:")
    assert lines[2] == "valid UUUDDR -> K:0"


def test_validate_requires_input(capsys):
    code, _, _ = run_cli(capsys, "validate", "std")
    assert code == 2


def test_validate_rejects_unknown_letter(capsys):
    code, _, _ = run_cli(capsys, "validate", "std", "UX")
    assert code == 2


# ------------------------------------------------------------------ verify

def test_verify_skew_passes(capsys):
    code, out, _ = run_cli(capsys, "verify", "skew", "--max-len", "14")
    assert code == 0
    assert "0 failed" in out
    assert "FAIL" not in out


def test_verify_all_passes(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "all", "--order", "40", "--max-len", "8",
    )
    assert code == 0
    assert out.count("PASS") == 23


@pytest.mark.parametrize(
    "fault",
    [
        "std.golden-total:z^3",
        "std.slices-vs-dp:H0@z^8",
        "std.kernel-residual:z^5",
        "std.powcoeff-formula:j=2,n=3",
        "skew.dp-vs-exhaustive:n=6,K:0",
        "skew.powcoeff-formula:l=1,n=4",
        "skew.total-vs-slices:z^7",
        "skew.reversion-substitution:Z^3",
    ],
)
def test_verify_fault_injection_flips_exit_code(capsys, fault):
    variant = fault.split(".", 1)[0]
    code, out, _ = run_cli(
        capsys, "verify", variant, "--order", "40", "--max-len", "8",
        "--inject-fault", fault,
    )
    assert code == 1
    name, key = fault.split(":", 1)
    assert f"FAIL {name} at {key}:" in out


def test_verify_output_is_deterministic(capsys):
    args = ("verify", "std", "--order", "36", "--max-len", "6")
    code1, out1, _ = run_cli(capsys, *args)
    code2, out2, _ = run_cli(capsys, *args)
    assert (code1, out1) == (code2, out2)


# ------------------------------------------------------------------- misc

def test_render_rejects_unknown_format():
    report = SequenceReport(
        name="x", variant="std", method="dp", order=1, values=[1]
    )
    with pytest.raises(ValueError):
        render(report, "xml")


def test_no_arguments_is_usage_error(capsys):
    assert main([]) == 2


def test_module_invocation_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "stanley_paths",
         "series", "std", "--what", "total", "--order", "12"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == STD_TOTAL_12 + "\n"

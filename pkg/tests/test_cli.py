import pytest

from ietkit.cli import main
from ietkit.e3n import m1_tilde, mk, mk_tilde, parse_matrix
from ietkit.harness import parse_report_line
from ietkit.iet3 import code_orbit
from ietkit.wordmorph import parse_morphism, parse_window, phi_k

from conftest import GOLDEN_FLAGS, golden


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_word_example(capsys):
    code, out, _ = run(
        capsys, "word", "--disc", "5", "--alpha", "(-1/2)+1/2*s", "--beta", "3/2+(-1/2)*s", "--gamma", "1",
        "--x0", "0", "--from", "0", "--to", "9",
    )
    assert code == 0
    assert out.strip() == code_orbit(golden(), 0, 0, 9).letters
    assert len(out.strip()) == 10


def test_word_window_round_trip(capsys):
    code, out, _ = run(capsys, "word", *GOLDEN_FLAGS, "--from", "-5", "--to", "5", "--window")
    assert code == 0
    assert parse_window(out.strip()) == code_orbit(golden(), 0, -5, 5)


def test_e3n_check_example(capsys):
    assert run(capsys, "e3n-check", "--matrix", "0 1 0; 0 2 1; 1 0 2")[:2] == (0, "member eps=+1 det=1 c=1\n")
    code, out, _ = run(capsys, "e3n-check", "--matrix", "1 1 0; 0 1 0; 0 0 1")
    assert code == 1 and out.startswith("non-member")


def test_factorize_example(capsys):
    code, out, _ = run(capsys, "factorize", "--matrix", "0 1 0; 0 2 1; 1 0 2")
    assert code == 0
    rows = [line.split("\t") for line in out.splitlines() if not line.startswith("#")]
    assert len(rows) == 2
    for left, right in rows:
        assert tuple(
            sum(a * b for a, b in zip(r, c)) for r in parse_matrix(left) for c in zip(*parse_matrix(right))
        ) == tuple(x for row in mk(1) for x in row)
    assert out.splitlines()[-1] == "# 2 ordered pairs"
    code, out, _ = run(capsys, "factorize", "--matrix", "0 1 0; 0 2 1; 1 0 2", "--canonical")
    assert out.splitlines()[-1] == "# 1 canonical pairs"
    code, out, _ = run(capsys, "factorize", "--matrix", "0 0 1; 1 0 2; 0 1 0")
    assert code == 0 and "non-decomposable" in out


def test_factorize_tree(capsys):
    code, out, _ = run(capsys, "factorize", "--matrix", "0 2 1; 0 3 2; 1 0 2", "--tree")
    assert code == 0 and out.splitlines()[0] == "*"
    code, out, _ = run(capsys, "factorize", "--matrix", "0 2 1; 0 3 2; 1 0 2", "--tree", "--max-depth", "1")
    assert code == 0


def test_apply_and_compose(capsys):
    assert run(capsys, "apply", "--phik", "1", "--word", "ACB")[:2] == (0, "BCACBCB\n")
    assert run(capsys, "apply", "--xi", "--window=-2:ABCA")[:2] == (0, "-2:CBAC\n")
    # a spaced value starting with '-' reads as a flag
    assert run(capsys, "apply", "--xi", "--window", "-2:ABCA")[0] == 2
    code, out, _ = run(capsys, "compose", "--outer-xi", "--inner-phik", "1")
    assert code == 0 and parse_morphism(out.strip()).images == ("B", "BAB", "ACA")
    code, _, err = run(capsys, "apply", "--xi")
    assert code == 2 and "--word" in err


def test_matrix_and_mk(capsys):
    code, out, _ = run(capsys, "matrix", "--phik", "3")
    assert parse_matrix(out.strip()) == mk(3)
    assert parse_matrix(run(capsys, "mk", "--k", "4")[1].strip()) == mk(4)
    assert parse_matrix(run(capsys, "mk", "--k", "4", "--which", "mk-tilde")[1].strip()) == mk_tilde(4)
    assert parse_matrix(run(capsys, "mk", "--which", "m1-tilde")[1].strip()) == m1_tilde()
    assert run(capsys, "mk")[0] == 2


def test_eigvec_and_units(capsys):
    assert run(capsys, "eigvec", "--matrix", "0 1 0; 0 2 1; 1 0 2")[:2] == (0, "c=1\n")
    assert run(capsys, "eigvec", "--matrix", "1 0 0; 1 1 0; 0 0 1")[:2] == (1, "none\n")
    code, out, _ = run(capsys, "units")
    assert [parse_matrix(x) for x in out.splitlines()] == [((1, 0, 0), (0, 1, 0), (0, 0, 1)), ((0, 0, 1), (0, 1, 0), (1, 0, 0))]
    assert run(capsys, "units", "--matrix", "0 0 1; 0 1 0; 1 0 0")[:2] == (0, "unit\n")
    assert run(capsys, "units", "--matrix", "0 1 0; 0 0 1; 1 0 0")[:2] == (1, "not-unit\n")


def test_verify_phik_exit_codes(capsys):
    code, out, _ = run(capsys, "verify-phik", "--k", "2", *GOLDEN_FLAGS, "--n", "200")
    assert code == 0
    rep = parse_report_line(out.rstrip("\n"))
    assert rep.verified and rep.params["k"] == "2"
    code, out, _ = run(capsys, "verify-phik", "--k", "2", *GOLDEN_FLAGS, "--n", "200", "--negative-control")
    assert code == 1 and parse_report_line(out.rstrip("\n")).witness
    code, out, _ = run(capsys, "verify-phik", "--k", "1", *GOLDEN_FLAGS, "--two-sided", "--summary")
    assert code == 0 and out.startswith("phik-preserves-two-sided: VERIFIED")


def test_verify_xi_exit_codes(capsys):
    assert run(capsys, "verify-xi", *GOLDEN_FLAGS, "--N", "100")[0] == 0
    assert run(capsys, "verify-xi", *GOLDEN_FLAGS, "--N", "100", "--negative-control")[0] == 1


def test_decomposition_and_witnesses(capsys):
    assert run(capsys, "verify-decomposition", "--k", "2")[0] == 0
    code, out, _ = run(capsys, "verify-decomposition", "--k", "6")
    assert code == 3 and parse_report_line(out.rstrip("\n")).status.value == "inconclusive"
    code, out, _ = run(capsys, "witnesses", "--kmax", "2")
    assert code == 0 and len(out.splitlines()) == 2
    assert run(capsys, "witnesses", "--kmax", "6")[0] == 2


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--max-entry", "2")
    lines = out.splitlines()
    assert code == 0 and lines[-1] == "# 38 members with entries <= 2"
    assert parse_matrix("0 1 0; 0 2 1; 1 0 2") in [parse_matrix(x) for x in lines[:-1]]
    assert run(capsys, "enumerate", "--max-entry", "9")[0] == 2


def test_check_morphism(capsys):
    assert run(capsys, "check-morphism", "--morphism", "A=AB;B=B;C=C")[0] == 1
    assert run(capsys, "check-morphism", "--phik", "2")[0] == 3


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["nosuch"],
        ["word", *GOLDEN_FLAGS, "--to", "3", "--bogus"],
        ["word", *GOLDEN_FLAGS],
        ["mk", "--k", "0"],
        ["mk", "--k", "x"],
        ["verify-phik", "--k", "1", "--disc", "5", "--alpha", "1.5", "--beta", "1", "--gamma", "1"],
        ["word", "--alpha", "1/3", "--beta", "1/3", "--gamma", "1/3", "--x0", "1", "--to", "3"],
        ["word", *GOLDEN_FLAGS, "--from", "4", "--to", "3"],
        ["e3n-check", "--matrix", "1 2; 3 4"],
        ["apply", "--morphism", "A=B;B=;C=A", "--word", "A"],
        ["apply", "--phik", "1", "--word", "ABD"],
        ["verify-phik", "--k", "1", "--alpha", "1/3", "--beta", "1/3", "--gamma", "1/3"],
    ],
)
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err


def test_usage_error_names_offending_flag(capsys):
    _, _, err = run(capsys, "word", *GOLDEN_FLAGS, "--to", "3", "--bogus")
    assert "--bogus" in err
    _, _, err = run(capsys, "mk", "--k", "0")
    assert "--k" in err and ">= 1" in err


def test_help_exits_zero(capsys):
    assert run(capsys, "--help")[0] == 0


def test_printed_morphism_reparses(capsys):
    for k in (1, 2, 5):
        code, out, _ = run(capsys, "compose", "--outer-phik", str(k), "--inner-xi")
        m = parse_morphism(out.strip())
        assert m.images == tuple(phi_k(k).image(x) for x in "CBA")

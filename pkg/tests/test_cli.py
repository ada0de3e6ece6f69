import json

from foliation_indices.cli import main

from conftest import fixture_path


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_indices_example(capsys):
    code, out, _ = run(capsys, "indices", fixture_path("fermat_cone_k3"))
    assert code == 0
    assert "schwartz     1" in out
    assert "certified mu_D at N=5" in out


def test_indices_refusals_and_parse_errors(capsys):
    code, _, err = run(capsys, "indices", fixture_path("germ_not_invariant"))
    assert code == 2 and "v(f) mod f = x2" in err
    code, _, err = run(capsys, "indices", fixture_path("germ_malformed"))
    assert code == 1 and "line 3, column 19" in err
    code, _, err = run(capsys, "indices", fixture_path("p2_diagonal_line"))
    assert code == 1 and "exactly one point" in err
    code, _, _ = run(capsys, "indices", "/nonexistent.scn")
    assert code == 1


def test_verify_exit_codes(capsys):
    assert run(capsys, "verify", fixture_path("fermat_cone_k3"))[0] == 0
    assert run(capsys, "verify", fixture_path("p2_diagonal_line_omitted"))[0] == 3
    assert run(capsys, "verify", fixture_path("fermat_cone_k3_tampered"))[0] == 3
    assert run(capsys, "verify", fixture_path("fermat_cone_k3"), "--nmax", 4)[0] == 2
    assert run(capsys, "--nmax", 4, "verify", fixture_path("fermat_cone_k3"))[0] == 2
    assert run(capsys, "verify", fixture_path("germ_not_invariant"))[0] == 2


def test_verify_json_is_sorted_and_stable(capsys):
    code, out, _ = run(capsys, "verify", "--json", fixture_path("p2_three_lines"))
    data = json.loads(out)
    assert list(data) == sorted(data)
    assert json.dumps(data, sort_keys=True, indent=2) + "\n" == out
    _, again, _ = run(capsys, "verify", "--json", fixture_path("p2_three_lines"))
    assert again == out


def test_chern_examples(capsys):
    code, out, _ = run(capsys, "chern", "--n", 4, "--d", 0, "--k", 3, "--mu", 16)
    assert code == 0 and "schwartz_total = 1" in out
    _, out, _ = run(capsys, "--json", "chern", "--n", 2, "--d", 1, "--k", 1)
    values = json.loads(out)["values"]
    assert (values["gsv_total"], values["baum_bott_total"]) == (2, 3)
    _, out, _ = run(capsys, "chern", "--n", 3, "--d", 2, "--k", 9)
    assert "gsv_total = 423" in out and "negative_gsv_total: fails (lhs 423, rhs 0)" in out


def test_chern_flag_validation(capsys):
    assert run(capsys, "chern", "--n", 1, "--d", 0, "--k", 1)[0] == 1
    assert run(capsys, "chern", "--n", 2, "--d", 0)[0] == 1


def test_sweep(capsys):
    code, out, _ = run(capsys, "sweep", "--nmax", 2)
    assert code == 0 and "0 failures" in out
    code, out, _ = run(capsys, "sweep")
    assert code == 3
    assert "FAIL negative_gsv_total n=3 d=0 k=3: 9 vs 0" in out
    assert all(" n=3 " in l or " n=5 " in l or " n=7 " in l for l in out.splitlines() if l.startswith("FAIL"))
    assert run(capsys, "sweep", "--kmax", 1)[0] == 1


def test_usage_errors(capsys):
    assert main(["frobnicate"]) == 1
    assert main([]) == 1
    assert main(["--help"]) == 0

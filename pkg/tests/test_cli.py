import json

import pytest

from operadic.cli import main


@pytest.fixture()
def sig_file(tmp_path):
    p = tmp_path / "sig.txt"
    p.write_text("a 1\nb 2\nc 3\n")
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_stats(capsys, sig_file):
    code, out, _ = run(capsys, "stats", "--sig", sig_file, "c(*,b(*,a(*)),b(*,*))")
    assert code == 0
    assert out.strip() == "degree=4 arity=5"


def test_hilbert_profile(capsys):
    code, out, _ = run(capsys, "hilbert", "--profile", "0,2", "--n", "4")
    assert code == 0
    assert out.strip() == "1 2 8 32 128"


def test_charge(capsys, sig_file):
    code, out, _ = run(
        capsys, "charge", "--sig", sig_file, "c(a,c(c,b,b)) ; b ; a(b)"
    )
    assert code == 0
    assert out.strip() == "3"


def test_coproduct_text(capsys, sig_file):
    code, out, _ = run(capsys, "coproduct", "--sig", sig_file, "a(a(*))")
    assert code == 0
    assert out.strip() == (
        "1*E[] (x) E[a(a(*))] + 1*E[a(*)] (x) E[a(*)] + 1*E[a(a(*))] (x) E[]"
    )


def test_json_round_trip(capsys, sig_file):
    code, out, _ = run(
        capsys, "coproduct", "--sig", sig_file, "--format", "json", "b(a(*),*)"
    )
    assert code == 0
    parsed = json.loads(out)
    assert json.dumps(parsed, sort_keys=True, separators=(",", ":")) == out.strip()
    assert parsed["type"] == "tensor"
    assert sum(t["coeff"] for t in parsed["terms"]) == 3


def test_deterministic_output(capsys, sig_file):
    argv = ("antipode", "--sig", sig_file, "b(a(*),*)")
    _, out1, _ = run(capsys, *argv)
    _, out2, _ = run(capsys, *argv)
    assert out1 == out2


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "--profile", "0,1")
    assert code == 0
    assert out.strip() == "commutative=no cocommutative=yes"


def test_realize_and_pos(capsys, sig_file):
    code, out, _ = run(
        capsys, "pos", "--sig", sig_file, "b(a(*),*)", "--L", "2"
    )
    assert code == 0
    assert out.strip() == "word=b[e].a[1] weight=1"
    code, out, _ = run(
        capsys, "realize", "--sig", sig_file, "a(*)", "--alphabet", "len",
        "--L", "1",
    )
    assert code == 0
    assert out.strip() == "1*a[0] + 1*a[1]"


def test_theta_check(capsys, sig_file):
    code, out, _ = run(
        capsys, "theta-check", "--sig", sig_file, "b(*,*)",
        "--L1", "1", "--L2", "2",
    )
    assert code == 0
    assert out.strip() == "ok"


def test_phi_and_quotient_verbs(capsys, sig_file):
    code, out, _ = run(
        capsys, "phi", "--sig", sig_file, "--kind", "mas", "{a,b}"
    )
    assert code == 0
    assert out.count("+") == 2  # three trees
    code, out, _ = run(capsys, "mas-coproduct", "--sig", sig_file, "{a,a}")
    assert code == 0
    assert "1*E[{a}] (x) E[{a}]" in out
    code, out, _ = run(capsys, "fdb-coproduct", "--r", "2", "--s", "1", "3")
    assert code == 0
    assert "5*E[2] (x) E[1]" in out
    code, out, _ = run(capsys, "phr-coproduct", "--sig", sig_file, "a,a,b")
    assert code == 0
    assert "2*E[{a,b}] (x) E[{a}]" in out


def test_trim_untrim_verbs(capsys, sig_file):
    code, out, _ = run(
        capsys, "trim", "--sig", sig_file,
        "b(a(*),*) ; * ; c(*,*,b(a(*),c(*,*,*)))",
    )
    assert code == 0
    assert out.strip() == "b(a);c(b(a,c))"
    code, out, _ = run(capsys, "untrim", "--sig", sig_file, "b(a)")
    assert code == 0
    assert sorted(out.strip().splitlines()) == ["b(*,a(*))", "b(a(*),*)"]


def test_decompose_wqsym_verb(capsys, sig_file):
    code, out, _ = run(
        capsys, "decompose-wqsym", "--sig", sig_file, "c(a(*),*,b(*,*))"
    )
    assert code == 0
    assert out.count("M[") == 3


def test_usage_error_exit_2(capsys, sig_file):
    with pytest.raises(SystemExit) as exc:
        main(["bogus-verb"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2


def test_domain_error_exit_1(capsys, sig_file):
    code, _, err = run(capsys, "stats", "--sig", sig_file, "d(*)")
    assert code == 1
    assert "error:" in err
    code, _, err = run(capsys, "stats", "c(*,*,*)")
    assert code == 1  # missing signature
    code, _, err = run(capsys, "hilbert", "--profile", "x", "--n", "2")
    assert code == 1

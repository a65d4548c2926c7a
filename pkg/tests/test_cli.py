"""Command-line surface: subcommands, exit codes, determinism."""

import json

import pytest

from coulombalg import ambient_table, parse_expression, parse_problem_text
from coulombalg.cli import main

U1 = "torus_rank = 1\nsu2_blocks = 0\nweight = 1\nweight = -1\n"
SU2 = "torus_rank = 0\nsu2_blocks = 1\nweight = 1\nweight = -1\n"


@pytest.fixture
def u1_file(tmp_path):
    path = tmp_path / "u1.prob"
    path.write_text(U1)
    return str(path)


@pytest.fixture
def su2_file(tmp_path):
    path = tmp_path / "su2.prob"
    path.write_text(SU2)
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_membership_member(capsys, u1_file):
    code, out, _ = run(capsys, "membership", "--problem", u1_file, "--expr", "z*(mu-tau)")
    assert code == 0
    assert out.splitlines()[0] == "Member"


def test_membership_non_member(capsys, u1_file):
    code, out, _ = run(capsys, "membership", "--problem", u1_file, "--expr", "z")
    assert code == 1
    assert out.splitlines()[0] == "NotMember"
    assert "mu - tau" in out


def test_input_errors_exit_2(capsys, u1_file, tmp_path):
    code, _, err = run(capsys, "membership", "--problem", u1_file, "--expr", "1/(z+tau)")
    assert code == 2 and "multiplicative" in err
    code, _, err = run(capsys, "membership", "--problem", str(tmp_path / "nope"), "--expr", "z")
    assert code == 2
    bad = tmp_path / "bad.prob"
    bad.write_text("rank = 1\n")
    code, _, err = run(capsys, "membership", "--problem", str(bad), "--expr", "z")
    assert code == 2


def test_presentation_default_generators(capsys, u1_file):
    code, out, _ = run(capsys, "presentation", "--problem", u1_file)
    assert code == 0
    assert "relation: x*y - mu^2 + tau^2" in out


def test_verify_diagram_su2(capsys, su2_file):
    code, out, _ = run(capsys, "verify-diagram", "--problem", su2_file)
    assert code == 0
    lines = out.splitlines()
    assert "x: 1 [ok]" in lines
    assert "y: 1 [ok]" in lines
    assert "w: 0 [ok]" in lines
    assert "diagram: pass" in lines


def test_generator_override_failure_exits_1(capsys, tmp_path):
    path = tmp_path / "bad_gens.prob"
    path.write_text(U1 + "generator z = z\n")
    code, out, _ = run(capsys, "verify-diagram", "--problem", str(path))
    assert code == 1  # the bad generator becomes a failing report entry
    assert "z: (mu + eta) / (mu - eta) [denominator]" in out
    assert "diagram: fail" in out


def test_blowup_description(capsys, su2_file):
    code, out, _ = run(capsys, "blowup", "--problem", su2_file)
    assert code == 0
    assert "relation: tau*u - z + 1" in out
    assert "derived v = u*z^-1" in out


def test_translate_images(capsys, su2_file):
    code, out, _ = run(capsys, "translate", "--problem", su2_file)
    assert code == 0
    assert "z -> (mu*z + tau*z) / (mu - tau)" in out
    assert "u -> (mu*u + tau*u + 2) / (mu - tau)" in out


def test_euler_section_sides(capsys, u1_file):
    code, out, _ = run(capsys, "euler-section", "--problem", u1_file, "--side", "tau")
    assert code == 0 and "z -> (mu + tau) / (mu - tau)" in out
    code, out, _ = run(capsys, "euler-section", "--problem", u1_file, "--side", "eta")
    assert code == 0 and "z -> (mu + eta) / (mu - eta)" in out


def test_seidel_and_sh(capsys, u1_file):
    code, out, _ = run(capsys, "seidel", "--problem", u1_file)
    assert code == 0 and "diagonal: mu^2 - eta^2" in out
    code, out, _ = run(capsys, "sh", "--problem", u1_file)
    assert code == 0 and "inverted: mu + eta, mu - eta" in out


def test_map_and_mu_zero(capsys, u1_file):
    code, out, _ = run(capsys, "map", "--problem", u1_file, "--expr", "z*(mu-tau)")
    assert code == 0 and "image: mu + eta" in out
    code, out, _ = run(capsys, "mu-zero", "--problem", u1_file)
    assert code == 0 and "relation: x*y + tau^2" in out


def test_weyl_invariants_and_pure_branch(capsys, su2_file):
    code, out, _ = run(capsys, "weyl-invariants", "--problem", su2_file, "--expr", "z")
    assert code == 0 and "average: 1/2*z + 1/2*z^-1" in out
    code, out, _ = run(capsys, "pure-branch", "--problem", su2_file)
    assert code == 0 and "kind: blowup" in out


def test_reruns_byte_identical(capsys, u1_file):
    outputs = []
    for _ in range(2):
        _, out, _ = run(
            capsys, "presentation", "--problem", u1_file, "--format", "json"
        )
        outputs.append(out)
    assert outputs[0] == outputs[1]
    for _ in range(2):
        _, out, _ = run(capsys, "membership", "--problem", u1_file, "--expr", "z*(mu-tau)")
        outputs.append(out)
    assert outputs[2] == outputs[3]


def test_json_and_text_describe_same_elements(capsys, u1_file):
    _, text_out, _ = run(capsys, "generators", "--problem", u1_file)
    _, json_out, _ = run(capsys, "generators", "--problem", u1_file, "--format", "json")
    payload = json.loads(json_out)
    ring = ambient_table(parse_problem_text(U1).problem())
    text_elements = {}
    for line in text_out.splitlines():
        name, expr = line.split(" = ", 1)
        text_elements[name] = parse_expression(expr, ring.factors)
    for name, data in payload["generators"].items():
        assert parse_expression(data["text"], ring.factors) == text_elements[name]
    assert payload["exit_code"] == 0

import pathlib

import pytest

from logroot.cli import run

GOLDEN = pathlib.Path(__file__).parent / "golden"
DROOT = str(GOLDEN / "droot.lr")


def invoke(*argv):
    return run(list(argv))


def write_doc(tmp_path, text):
    path = tmp_path / "doc.lr"
    path.write_text(text)
    return str(path)


@pytest.mark.parametrize(
    "golden_name, argv",
    [
        ("droot_build_algebra_d2.txt", ["build-algebra", DROOT, "--name", "B2"]),
        ("droot_build_algebra_d3.txt", ["build-algebra", DROOT, "--name", "B3"]),
        ("droot_phi_structure_d2.txt", ["phi", DROOT, "--name", "N2"]),
        ("droot_phi_divisor_d2.txt", ["phi", DROOT, "--name", "N2x"]),
        ("droot_phi_structure_d3.txt", ["phi", DROOT, "--name", "N3"]),
        ("droot_phi_divisor_d3.txt", ["phi", DROOT, "--name", "N3x"]),
    ],
)
def test_golden_reports(golden_name, argv):
    text, code = invoke(*argv)
    assert code == 0
    assert text == (GOLDEN / golden_name).read_text()


def test_reports_are_deterministic():
    first, _ = invoke("phi", DROOT, "--name", "N2x")
    second, _ = invoke("phi", DROOT, "--name", "N2x")
    assert first == second


def test_exit_code_discipline(tmp_path):
    # 0: property holds
    _, code = invoke("check-kummer", DROOT, "--name", "j2")
    assert code == 0
    # 1: property fails
    doc = write_doc(
        tmp_path,
        "monoid P { gens a b; } monoid Q { gens q; } hom f : P -> Q { a -> q; b -> q; }",
    )
    text, code = invoke("check-kummer", doc, "--name", "f")
    assert code == 1 and "kummer = false" in text
    # 2: input error (syntax)
    doc = write_doc(tmp_path, "monoid M { gens a; rel a + = b; }")
    text, code = invoke("check-monoid", doc, "--name", "M")
    assert code == 2 and "error" in text
    # 2: input error (unresolved reference)
    text, code = invoke("check-monoid", DROOT, "--name", "missing")
    assert code == 2
    # 3: resource bailout is distinct from failure
    doc = write_doc(tmp_path, "monoid M { gens a b c; rel 2 a = b + c; rel 2 b = a + c; rel 2 c = a + b; }")
    text, code = invoke("check-monoid", doc, "--name", "M", "--rule-budget", "1")
    assert code == 3 and "resource_error" in text


def test_check_monoid_report(tmp_path):
    doc = write_doc(tmp_path, "monoid M { gens a b; rel a + b = 2 b; }")
    text, code = invoke("check-monoid", doc, "--name", "M")
    assert code == 0
    assert "integral = false" in text
    assert "group = Z" in text


def test_check_parabolic_failure_locus(tmp_path):
    doc = write_doc(
        tmp_path,
        """
        monoid P { gens a; } monoid Q { gens q; }
        hom j : P -> Q { a -> 2 q; }
        ring R = QQ[s];
        chart C : P -> R { a -> s; }
        denominators D : j;
        algebra B : C D;
        parabolic Ebad : B { slot 0 : 1; slot 1/2 : 1; map 0 q : [[1]]; map 1/2 q : [[1]]; }
        """,
    )
    text, code = invoke("check-parabolic", doc, "--name", "Ebad")
    assert code == 1
    assert "valid = false" in text and "period" in text


def test_roundtrip_command():
    text, code = invoke("roundtrip", DROOT, "--name", "N2x")
    assert code == 0 and "iso = true" in text


def test_hom_and_tensor_commands(tmp_path):
    doc = write_doc(
        tmp_path,
        """
        monoid P { gens a; } monoid Q { gens q; }
        hom j : P -> Q { a -> 2 q; }
        ring F = GF(2);
        chart C : P -> F { a -> 0; }
        denominators D : j;
        algebra B : C D;
        parabolic E : B { slot 0 : 1; map 0 q : []; map 1/2 q : []; }
        parabolic Ep : B { slot 1/2 : 1; map 0 q : []; map 1/2 q : []; }
        """,
    )
    text, code = invoke("hom", doc, "--source", "E", "--target", "Ep")
    assert code == 0
    assert "slot 1/2 = rank 1" in text and "slot 0 = rank 0" in text
    text, code = invoke("tensor", doc, "--left", "E", "--right", "Ep")
    assert code == 0
    assert "slot 1/2 = rank 1" in text


def test_stalk_command(tmp_path):
    doc = write_doc(
        tmp_path,
        """
        monoid P { gens a b; }
        ring R = QQ[s];
        chart C : P -> R { a -> s; b -> s - 1; }
        """,
    )
    text, code = invoke("stalk", doc, "--chart", "C", "--at", "s=0")
    assert code == 0 and "kernel = b" in text and "minimal = false" in text
    text, code = invoke("stalk", doc, "--chart", "C")
    assert code == 0 and "kernel = 0" in text


def test_classify_stack_command(tmp_path):
    doc = write_doc(
        tmp_path,
        """
        monoid P { gens a; } monoid Q { gens q; }
        hom j : P -> Q { a -> 2 q; }
        ring F = GF(2);
        chart C : P -> F { a -> 1; }
        denominators D : j;
        algebra B : C D;
        """,
    )
    text, code = invoke("classify-stack", doc, "--name", "B")
    assert code == 0
    assert "tame = true" in text and "dm = false" in text


def test_selftest_command():
    text, code = invoke("selftest")
    assert code == 0
    assert "all = pass" in text


def test_declaration_order_is_irrelevant(tmp_path):
    doc = write_doc(
        tmp_path,
        """
        algebra B : C D;
        denominators D : j;
        chart C : P -> R { a -> s; }
        ring R = QQ[s];
        hom j : P -> Q { a -> 2 q; }
        monoid Q { gens q; }
        monoid P { gens a; }
        """,
    )
    text, code = invoke("build-algebra", doc, "--name", "B")
    assert code == 0 and "relation x_q^2 = s * t_a" in text


def test_duplicate_names_rejected(tmp_path):
    doc = write_doc(tmp_path, "monoid P { gens a; } monoid P { gens b; }")
    _, code = invoke("check-monoid", doc, "--name", "P")
    assert code == 2

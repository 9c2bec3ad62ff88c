from fractions import Fraction

import pytest

import qtoric
from qtoric import _coeffs  # noqa: F401  (import sanity)


def p2():
    return qtoric.Fan(2, [[1, 0], [0, 1], [-1, -1]], [[0, 1], [1, 2], [0, 2]])


def blowup_p3():
    rays = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [-1, -1, -1], [1, 1, 1]]
    cones = [[1, 2, 3], [1, 2, 4], [0, 2, 3], [0, 2, 4], [0, 1, 3], [0, 1, 4]]
    return qtoric.Fan(3, rays, cones)


def test_validate():
    assert qtoric.validate(p2())["valid"]
    broken = qtoric.Fan(2, [[1, 0], [0, 1], [-1, -1]], [[0, 1], [1, 2]])
    report = qtoric.validate(broken)
    assert not report["valid"]
    assert report["error"] == "NotComplete"


def test_class_lattice():
    assert qtoric.class_rank(p2()) == 1
    assert qtoric.class_rank(blowup_p3()) == 2


def test_cohomology_and_oracle():
    f = p2()
    table = qtoric.cohomology(f, ["2", "0", "0"])
    assert table["dims"] == [6, 0, 0]
    assert qtoric.cech(f, ["2", "0", "0"]) == [6, 0, 0]
    assert qtoric.cohomology_dims(f, [-3, 0, 0]) == [0, 0, 1]


def test_keep_weights():
    table = qtoric.cohomology(p2(), ["2", "0", "0"], True)
    assert len(table["weights"][0]) == 6


def test_q_ample():
    f = blowup_p3()
    # internal class basis of the blowup is (H, E)
    assert qtoric.is_q_ample(f, ["2", "-1"], 0)
    assert not qtoric.is_q_ample(f, ["1", "-2"], 0)
    assert qtoric.is_q_ample(f, ["1", "-2"], 1)
    assert qtoric.level(f, [-1, 0]) == 3
    cone = qtoric.q_ample_cone(f, 1)
    assert cone["q"] == 1
    assert len(cone["cells"]) >= 1


def test_hhat():
    f = p2()
    assert qtoric.hhat_value(f, [1, 0, 0], 0) == 1
    assert qtoric.hhat_value(f, ["1/2", 0, 0], 0) == Fraction(1, 4)
    assert qtoric.hhat_homogeneity_check(f, ["-1", "0", "0"], 2, "3")


def test_vanishing_check():
    report = qtoric.vanishing_check(blowup_p3(), ["2", "-1"], 0)
    assert report["membership"] and report["sampled_zero"] and report["structural_zero"]
    assert not report["inconclusive"]


def test_figure():
    svg = qtoric.figure_svg(blowup_p3(), 0)
    assert svg.startswith("<svg")
    with pytest.raises(ValueError):
        qtoric.figure_svg(p2(), 0)


def test_errors_translate():
    with pytest.raises(ValueError, match="NotCartier"):
        f = qtoric.Fan(2, [[1, 0], [0, 1], [-1, -2]], [[0, 1], [1, 2], [0, 2]])
        qtoric.cohomology(f, ["0", "0", "1"])

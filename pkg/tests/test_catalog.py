import math
from fractions import Fraction

import pytest

from centerfocus import (
    R2,
    X,
    Y,
    compute_lyapunov,
    detect_symmetries,
    evaluate,
    get,
    list_families,
    period,
    verify_darboux,
)
from centerfocus.errors import LambdaZero, MissingParam, UnknownName
from centerfocus.inverse import find_cofactor

FAMILY_NAMES = (
    "bautin", "schl", "schl1", "rgg", "req", "reqq",
    "loud1", "loud2", "loud3", "loud4",
    "kukles", "chava56", "chava23", "cubic_qh",
    "rloud_cubic1", "rloud_cubic2", "rloud_cubic3", "rloud_cubic4",
    "quartic_uuu", "quartic_ttt", "quintic_ssss",
    "quartic_family", "quintic_family", "r01200",
)

# one nontrivial parameter point per family; parameterless ones stay ()
SAMPLE_PARAMS = {
    "bautin": dict(lam3=1, lam6=1),
    "schl": dict(a=1, b=1, c=1, k=1, l=1, m=1),
    "schl1": dict(a=1, beta=-2, lam="1/3"),
    "rgg": dict(lam4=1, lam5=-2),
    "req": dict(alpha=1, r=2, s=-1),
    "reqq": dict(b=1, c=2, beta=-3),
    "kukles": dict(alpha=1, beta=2, N=-1),
    "chava56": dict(a=1, b=0),
    "chava23": dict(a=1, b=2, L="1/3", M=-1),
    "cubic_qh": dict(A=1, C=-2, L=2, N=-1),
    "quartic_family": dict(L40=1, K22=0, L22=-1, K04=2),
    "quintic_family": dict(L50=1, L41=-2, L23=0, K05="1/2"),
    "r01200": dict(b=1, c=-2, beta=3, gamma=-1),
}

TWO_PI = 2.0 * math.pi


def lyapunov_order(entry):
    deg = max(entry.field.p.degree(), entry.field.q.degree())
    return 6 if deg == 2 else 8 if deg == 3 else 10


def check_tag(entry, tag):
    field = entry.field
    if tag == "CenterCandidate":
        assert compute_lyapunov(field, lyapunov_order(entry)).verdict == "CenterCandidate"
    elif tag == "FocusSign(+)":
        assert compute_lyapunov(field, lyapunov_order(entry)).verdict == "UnstableFocus"
    elif tag == "FocusSign(-)":
        assert compute_lyapunov(field, lyapunov_order(entry)).verdict == "StableFocus"
    elif tag == "Reversible":
        rep = detect_symmetries(field)
        assert rep.rev_x_axis or rep.rev_y_axis
    elif tag == "CauchyRiemann":
        assert detect_symmetries(field).cauchy_riemann
    elif tag == "Hamiltonian":
        assert detect_symmetries(field).hamiltonian
    elif tag == "DarbouxCandidate":
        assert entry.darboux is not None
        assert verify_darboux(field, entry.darboux)
    elif tag == "UniformlyIsochronous":
        assert X * field.q - Y * field.p == R2
    elif tag == "Isochronous":
        for c in (0.05, 0.1):
            assert abs(period(field, c).period - TWO_PI) < 1e-8
    else:
        pytest.fail(f"untestable expectation tag {tag!r}")


def test_family_listing():
    assert tuple(sig.name for sig in list_families()) == FAMILY_NAMES


@pytest.mark.parametrize("name", FAMILY_NAMES)
def test_every_expectation_is_engine_backed(name):
    entry = get(name, **SAMPLE_PARAMS.get(name, {}))
    assert entry.name == name
    for tag in sorted(entry.expectations):
        check_tag(entry, tag)


@pytest.mark.parametrize("name", FAMILY_NAMES)
def test_printed_form_matches_orientation(name):
    entry = get(name, **SAMPLE_PARAMS.get(name, {}))
    if entry.orientation == "clockwise":
        assert entry.printed is not None
        assert entry.field.p == -entry.printed[0]
        assert entry.field.q == -entry.printed[1]
    else:
        assert entry.printed is None


def test_param_coercion_and_defaults():
    entry = get("bautin", lam5="1/2", lam3=2)
    assert entry.params == {
        "lam2": 0, "lam3": Fraction(2), "lam4": 0,
        "lam5": Fraction(1, 2), "lam6": 0,
    }
    assert all(isinstance(v, Fraction) for v in entry.params.values())


def test_unknown_family():
    with pytest.raises(UnknownName):
        get("lorenz")


def test_unknown_param():
    with pytest.raises(UnknownName):
        get("bautin", mass=1)


def test_required_param_enforced():
    with pytest.raises(MissingParam):
        get("schl1", a=1)
    with pytest.raises(LambdaZero):
        get("schl1", a=1, lam=0)


def test_bautin_degenerate_point_meets_all_cases():
    entry = get("bautin")
    assert entry.extras["cases"] == ["i", "ii", "iii", "iv"]
    assert entry.expectations == {"CenterCandidate"}


def test_bautin_case_iv_instances_are_centers():
    # lam6 = u^2, lam2 = uv, lam3 = 2u^2 + v^2 solves the case-iv equations
    for u, v in ((1, 2), (Fraction(1, 2), -1), (2, Fraction(1, 3))):
        l6, l2, l3 = u * u, u * v, 2 * u * u + v * v
        entry = get("bautin", lam2=l2, lam3=l3, lam4=-5 * (l3 - l6), lam6=l6)
        assert "iv" in entry.extras["cases"]
        assert compute_lyapunov(entry.field, 6).verdict == "CenterCandidate"


def test_schl_focus_instance_sign():
    entry = get("schl", a=1, b=2, c=0, k=3, l=1, m=1)
    assert entry.extras["cases"] == []
    assert entry.expectations == {"FocusSign(-)"}


def test_schl1_special_multipliers():
    half = get("schl1", a=1, beta=-2, lam="1/2")
    assert {"CauchyRiemann", "Isochronous"} <= half.expectations
    two_thirds = get("schl1", a=1, beta=-2, lam="2/3")
    assert "UniformlyIsochronous" in two_thirds.expectations


def test_cubic_qh_second_center_case():
    entry = get("cubic_qh", A=3, C=-7, L=1, N=-1)
    assert entry.extras["cases"] == ["ii"]
    assert compute_lyapunov(entry.field, 8).verdict == "CenterCandidate"


def test_chava23_invariant_conic_shares_r2_cofactor():
    entry = get("chava23", a=1, b=2, L="1/3", M=-1)
    conic = entry.extras["invariant_curve"]
    cert_conic = find_cofactor(entry.field, conic)
    cert_r2 = find_cofactor(entry.field, R2)
    assert cert_conic is not None and cert_r2 is not None
    assert cert_conic.cofactor == cert_r2.cofactor  # so r^2 / conic is constant


def test_quartic_disputed_fixtures_are_order_three_foci():
    # both fixtures pass order 6 but fail at order 8; the return map agrees
    # (delta scales like 2 pi V3 c^7), so the expectations say focus
    uuu = get("quartic_uuu")
    assert uuu.expectations == {"FocusSign(-)"}
    assert compute_lyapunov(uuu.field, 8).v_list[:3] == (0, 0, Fraction(-1, 64))
    assert uuu.notes
    ttt = get("quartic_ttt")
    assert ttt.expectations == {"FocusSign(+)"}
    assert compute_lyapunov(ttt.field, 8).v_list[:3] == (0, 0, Fraction(3, 32))


def test_quartic_ttt_zero_member_is_linear():
    entry = get("quartic_ttt", a=0)
    assert entry.expectations == {"CenterCandidate"}
    assert entry.field.p == -Y and entry.field.q == X


def test_quartic_uuu_second_equilibrium():
    entry = get("quartic_uuu")
    x_star, y_star = entry.extras["second_equilibrium"]
    assert abs(evaluate(entry.field.p, x_star, y_star)) < 1e-12
    assert abs(evaluate(entry.field.q, x_star, y_star)) < 1e-12

"""End-to-end smoke tests for the python bindings."""

import math
import pathlib

import pytest

import cuspgauge as cg

DATA = pathlib.Path(__file__).resolve().parents[2] / "data" / "sample-catalog.json"


def test_version():
    assert cg.__version__ == "1.0.0"


def test_lattice_basics():
    lat = cg.CuspLattice(v1=(2.0, 0.0), v2=(0.0, 2.0), claimed_maximal=True)
    assert cg.lattice_area(lat) == pytest.approx(4.0)
    rep = cg.check_admissibility(lat, 1.0)
    assert rep.admissible and rep.shortest == pytest.approx(2.0)

    short = cg.minimal_slope(lat)
    assert (short.slope.p, short.slope.q) == (0, 1)  # tie broken lexicographically
    assert short.length == pytest.approx(2.0)

    slopes = cg.enumerate_slopes(lat, 2 * math.pi)
    assert len(slopes) == 8

    assert cg.normalize_slope(2, -4) == cg.Slope(-1, 2)
    assert cg.intersection_number(cg.Slope(1, 0), cg.Slope(0, 1)) == 1
    with pytest.raises(cg.InvalidInputError):
        cg.normalize_slope(0, 0)


def test_lattice_rejects_degenerate_basis():
    with pytest.raises(cg.InvalidInputError):
        cg.CuspLattice(v1=(1.0, 0.0), v2=(2.0, 0.0))
    assert issubclass(cg.InvalidInputError, ValueError) is False  # own hierarchy
    assert issubclass(cg.InvalidInputError, cg.Error)


def test_filling_certificates():
    lat = cg.CuspLattice(v1=(7.0, 0.0), v2=(0.0, 7.0))
    cert = cg.certify_two_pi([("cusp0", lat, cg.Slope(1, 0))])
    assert cert.certified and cert.min_length == pytest.approx(7.0)

    boundary = cg.CuspLattice(v1=(2 * math.pi, 0.0), v2=(0.0, 2 * math.pi))
    assert not cg.certify_two_pi([("cusp0", boundary, cg.Slope(1, 0))]).certified

    census = cg.short_slope_census(
        cg.CuspLattice(v1=(2.0, 0.0), v2=(0.0, 2.0), claimed_maximal=True)
    )
    assert len(census.slopes) == 8 and census.within_excluded_bound

    with pytest.raises(cg.PreconditionError):
        cg.short_slope_census(cg.CuspLattice(v1=(2.0, 0.0), v2=(0.0, 2.0)))

    assert cg.surgery_fraction_check(1, 23).satisfied
    assert not cg.surgery_fraction_check(1, 22).satisfied

    cover = cg.certify_branched_cover(
        degree=3, lifts=[(7, 1.0), (8, 1.2)], base_volume=2.0298832128193072
    )
    assert cover.certified
    assert cover.cover_volume == 3.0 * 2.0298832128193072
    assert cover.base_volume_ok


def test_reference_bounds():
    short = cg.lower_bound_from_reference(23, cg.ReferenceKind.SHORT)
    assert short > 2 * math.pi
    assert short == pytest.approx(23 * math.sqrt(3) / (2 * math.pi))
    assert cg.lower_bound_from_reference(22, cg.ReferenceKind.SHORT) < 2 * math.pi


def test_metric_build_and_pinch():
    prof = cg.build_profile(15.0, 1.0, 0.25)
    assert prof.l1 == pytest.approx(15.0, rel=1e-8)
    assert prof.f[0] == 0.0 and prof.fp[0] == pytest.approx(2 * math.pi, abs=1e-12)

    curv = cg.curvature_report(prof)
    assert curv.max_fd_mismatch <= 1e-5
    assert curv.k_inf == pytest.approx(-1.25, abs=1e-9)
    assert curv.k_sup == pytest.approx(-0.75, abs=1e-9)

    pinch = cg.pinch_certificate(prof)
    assert pinch.valid and pinch.a == pytest.approx(0.75, abs=1e-9)
    assert cg.profile_volume(prof) == pytest.approx(6.945447940458, abs=1e-9)
    assert cg.volume_ratio(prof) == pytest.approx(0.926059725394, abs=1e-9)

    collared = cg.attach_collar(prof, 0.5)
    assert collared.l1 == pytest.approx(15.0 * math.exp(0.5), rel=1e-8)

    with pytest.raises(cg.InfeasibleError):
        cg.build_profile(7.0, 1.0, 0.2)
    with pytest.raises(cg.InvalidInputError):
        cg.build_profile(6.0, 1.0, 0.25)
    assert cg.minimum_l1_for_t(0.25) == pytest.approx(12.8197292439, abs=1e-6)


def test_alpha_estimate():
    est = cg.alpha_estimate(7.0)
    assert est.feasible and est.a == pytest.approx(0.161480940412, abs=1e-9)

    rows = cg.alpha_curve([6.0, 8.0])
    assert not rows[0].feasible
    assert rows[1].feasible and rows[1].a == pytest.approx(0.358014425288, abs=1e-9)


def test_bounds():
    v3 = cg.ideal_simplex_volume()
    assert v3 == pytest.approx(1.0149416064096536, abs=1e-12)
    assert cg.hyperbolic_norm(2 * v3) == pytest.approx(2.0, abs=1e-9)
    assert cg.beta_from_alpha(0.5) == pytest.approx(8.75495281719, abs=1e-9)

    rep = cg.propagate_filling_bounds(4.0, alpha=0.5)
    assert rep.alpha_source == "supplied"
    assert rep.volume_lower_bound == pytest.approx(2.0)
    assert (rep.kappa_lo, rep.kappa_hi) == (-2.0, -0.5)

    iv = cg.gromov_interval(2.0, alpha=0.5)
    assert iv.hi / iv.lo == iv.beta

    cg.validate_hyperbolic_datum(2 * v3, 2.0)
    with pytest.raises(cg.InvalidInputError):
        cg.validate_hyperbolic_datum(2 * v3, 2.1)


def test_surface():
    assert cg.euler_characteristic(cg.SurfaceData(1, 1)) == -1
    assert cg.max_q_for_genus(1).max_q == 22
    assert cg.min_genus_for_q(23).min_genus == 2
    audit = cg.surface_length_audit(2 * math.pi, 1, cg.SurfaceData(1, 1))
    assert not audit.consistent  # boundary case fails strictly


def test_catalog():
    loaded = cg.load_catalog(str(DATA), strict=True)
    assert len(loaded.records) == 3 and not loaded.diagnostics
    square2 = cg.find_record(loaded, "square2")
    assert square2.cusps[0].claimed_maximal
    assert cg.find_record(loaded, "census-01").volume == pytest.approx(2.0298832128193072)
    with pytest.raises(cg.InvalidInputError):
        cg.find_record(loaded, "missing")

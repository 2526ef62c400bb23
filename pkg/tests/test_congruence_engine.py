import pytest

from plusforms.congruence_engine import (
    HalfIntegralWeightError,
    IncompatibleWeightsError,
    equalize_and_integralize,
    index_gamma0,
    sturm_bound,
    verify_congruence,
)
from plusforms.constructions import (
    NamedForm,
    ap_named,
    f_form,
    g31,
    hurwitz_progression,
    phi,
    psi,
)
from plusforms.level_one_forms import FormMeta
from plusforms.operators import OperatorTrace
from plusforms.qseries import QSeries


def _named(name, series, twice_weight, level):
    return NamedForm(name, series, FormMeta(twice_weight, level),
                     OperatorTrace((name,), level))


class TestBounds:
    @pytest.mark.parametrize("n,idx", [(1, 1), (4, 6), (36, 72), (324, 648)])
    def test_index(self, n, idx):
        assert index_gamma0(n) == idx

    @pytest.mark.parametrize("tw,level,bound", [
        (20, 4, 6), (20, 324, 541), (2, 1, 2), (50, 324, 1351)])
    def test_sturm_values(self, tw, level, bound):
        assert sturm_bound(tw, level) == bound

    def test_monotone(self):
        for tw in (2, 10, 24):
            for level in (1, 4, 36):
                assert sturm_bound(tw, level) <= sturm_bound(tw + 2, level)
                assert sturm_bound(tw, level) <= sturm_bound(tw, level * 2)

    def test_half_integral_rejected(self):
        with pytest.raises(HalfIntegralWeightError):
            sturm_bound(19, 4)


class TestEqualize:
    def test_f_vs_g31_shape(self):
        lhs, rhs, tw, level = equalize_and_integralize(f_form(60), g31(60), 3)
        assert tw == 20 and level == 324
        assert lhs.precision == 60 and rhs.precision == 60

    def test_equal_weights(self):
        a = phi(9, 30)
        _, _, tw, level = equalize_and_integralize(a, a, 3)
        assert tw == 20 and level == 4

    def test_odd_gap_rejected(self):
        lhs = ap_named(psi(12, 30), 2, 3)
        with pytest.raises(IncompatibleWeightsError):
            equalize_and_integralize(lhs, hurwitz_progression(30), 3)

    def test_r_multiplication_is_mod3_noop(self):
        from plusforms.operators import r_t

        g = g31(50).series
        assert (g * r_t(8, 50).series).reduce_mod(3).coeffs == \
            g.reduce_mod(3).coeffs


class TestVerify:
    def test_main_congruence(self):
        report = verify_congruence(f_form(650), g31(650), 3, True)
        assert report.verified
        assert report.unit == 2
        assert report.bound_used == 541
        assert report.strategy == "theta_integralize"
        assert report.weight_equalizer == 8

    def test_unit_restriction(self):
        report = verify_congruence(f_form(650), g31(650), 3, False)
        assert report.status == "mismatch"   # unit 1 alone cannot match
        report2 = verify_congruence(f_form(650), g31(650), 3, True,
                                    units=(2,))
        assert report2.verified and report2.unit == 2

    def test_psi_congruence_squared_strategy(self):
        p = 1622
        report = verify_congruence(ap_named(psi(12, p), 2, 3),
                                   hurwitz_progression(p), 3, True)
        assert report.verified
        assert report.unit == 1
        assert report.strategy == "squared"
        assert report.bound_used == 1351

    def test_insufficient_precision(self):
        report = verify_congruence(f_form(80), g31(80), 3, True)
        assert report.status == "insufficient_precision"
        assert report.required == 541 and report.available == 80

    def test_negative_control_reports_exact_index(self):
        base = phi(9, 60)
        coeffs = list(base.series.coeffs)
        coeffs[4] += 1
        perturbed = NamedForm("phi:9-perturbed", QSeries.rational(coeffs),
                              base.meta, base.trace)
        report = verify_congruence(base, perturbed, 3, False)
        assert report.status == "mismatch"
        assert report.first_n == 4
        assert report.bound_used == 6

    def test_theta_against_delta_coefficients(self):
        from plusforms.cohen_eisenstein import theta
        from plusforms.level_one_forms import delta

        th = _named("theta", theta(40).series, 1, 4)
        fake = _named("delta-as-half", delta(40).series, 1, 4)
        report = verify_congruence(th, fake, 3, True)
        assert report.status == "mismatch"
        assert report.first_n == 0

    def test_verified_survives_double_bound_recheck(self):
        report = verify_congruence(f_form(650), g31(650), 3, True)
        assert report.verified
        depth = 2 * report.bound_used
        lhs = f_form(depth).series.reduce_mod(3)
        rhs = g31(depth).series.reduce_mod(3).scale(report.unit)
        assert lhs.coeffs == rhs.coeffs

    def test_report_json_shape(self):
        report = verify_congruence(f_form(650), g31(650), 3, True)
        payload = report.to_json_dict()
        assert payload["status"] == "verified"
        assert payload["bound"] == 541
        assert payload["unit"] == 2
        assert set(payload) >= {"lhs", "rhs", "modulus", "bound",
                                "equalizer_t", "status", "unit"}

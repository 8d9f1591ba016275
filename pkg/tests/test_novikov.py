"""Tests for the Novikov-ring arithmetic and the Seidel pushforward."""

import pytest
import sympy

from symplectic_index.core.errors import ErrorCode, InputError, NovikovError
from symplectic_index.core.novikov import (
    SEIDEL_EXPECTED,
    SEIDEL_SOURCE,
    SPLIT_LOOPS,
    ClassSymbol,
    Exponent,
    Lattice,
    NovikovElement,
    SphereClass,
    albers_delta1_pushforward,
    area,
    chern,
    delta1_class,
    delta2,
    format_element,
    half_diagonal_maslov,
    monotonicity_witness,
    pair_class,
    parse_element,
    tau,
    tau_and_delta2,
    verify_seidel_pushforward,
)
from symplectic_index.models.report import MonotonicityVerdict, VerificationStatus


@pytest.mark.unit
class TestSphereClasses:
    def test_chern(self) -> None:
        assert chern(SphereClass.of("10")) == 2
        assert chern(SphereClass.of("0010")) == -2
        assert chern(SphereClass.of("0100") - SphereClass.of("1000")) == 0

    def test_area_is_exact(self) -> None:
        assert area(SphereClass.of("01"), "3/2") == sympy.Rational(3, 2)
        assert area(SphereClass.of("0001"), 2) == -2

    def test_area_needs_lambda_above_one(self) -> None:
        with pytest.raises(ValueError):
            area(SphereClass.of("10"), 1)

    def test_pair_and_delta1(self) -> None:
        cls = pair_class(SphereClass.of("10"), SphereClass.of("01"))
        assert cls == SphereClass.of("1001")
        assert delta1_class(cls).coefficients == (1, -1)

    def test_delta1_rejects_classes_of_x(self) -> None:
        with pytest.raises(NovikovError) as exc:
            delta1_class(SphereClass.of("10"))
        assert exc.value.code is ErrorCode.DIMENSION_MISMATCH

    def test_text(self) -> None:
        assert str(SphereClass.of("0100") - SphereClass.of("1000")) == "-(1000)+(0100)"
        assert str(SphereClass.zero(Lattice.X)) == "0"


@pytest.mark.unit
class TestMonotonicity:
    @pytest.mark.parametrize("lam, expected_area", [("5/4", "1/4"), ("3/2", "1/2"), ("2", "1")])
    def test_default_witness(self, lam: str, expected_area: str) -> None:
        report = monotonicity_witness(lam)
        assert report.chern == 0
        assert report.area == expected_area
        assert report.verdict is MonotonicityVerdict.NOT_MONOTONE
        assert report.lattice == "M"

    def test_nonzero_chern_is_not_a_witness(self) -> None:
        report = monotonicity_witness(2, SphereClass.of("1000"))
        assert report.verdict is MonotonicityVerdict.NOT_A_WITNESS


@pytest.mark.unit
class TestText:
    def test_golden_round_trip(self) -> None:
        assert format_element(parse_element(SEIDEL_EXPECTED)) == SEIDEL_EXPECTED
        assert format_element(parse_element(SEIDEL_SOURCE)) == SEIDEL_SOURCE

    def test_typeset_variants(self) -> None:
        typeset = "[(0111)−(1110)]e^{½(1000) + h[(0001)+(1000)]}"
        assert parse_element(typeset) == parse_element(SEIDEL_SOURCE)

    def test_terms_merge(self) -> None:
        element = parse_element("(01)+(01)-(10)+(10)")
        assert element == NovikovElement.term("01", coefficient=2)
        assert format_element(element) == "2*(01)"

    def test_zero_element(self) -> None:
        element = parse_element("(01)-(01)")
        assert element.is_zero
        assert element.lattice is None
        assert format_element(element) == ""

    @pytest.mark.parametrize(
        "text",
        ["(012)", "(01)e^{(1000)}", "[(01)+(1000)]", "(01)e^{1/2*(11)}", "(01)(10)", "1/2*(01)", "(01)e^{1/*(10)}"],
    )
    def test_parse_errors(self, text: str) -> None:
        with pytest.raises(InputError) as exc:
            parse_element(text)
        assert exc.value.code is ErrorCode.PARSE

    def test_mixed_lattices_rejected(self) -> None:
        with pytest.raises(NovikovError) as exc:
            parse_element("(01)+(1000)")
        assert exc.value.code is ErrorCode.DIMENSION_MISMATCH


@pytest.mark.unit
class TestIdentifications:
    def test_tau_is_an_involution(self) -> None:
        element = parse_element(SEIDEL_EXPECTED)
        assert tau(tau(element)) == element
        assert tau(element) != element

    def test_tau_rejects_elements_over_m(self) -> None:
        with pytest.raises(NovikovError):
            tau(parse_element(SEIDEL_SOURCE))

    def test_delta2_sign_follows_half_maslov(self) -> None:
        image = delta2(parse_element(SEIDEL_SOURCE))
        coefficients = {str(s): c for s, _, c in image.terms}
        assert coefficients == {"(0111)": -1, "(1110)": 1}
        exponent = image.terms[0][1]
        assert exponent.lattice is Lattice.X
        assert exponent.const == (sympy.Rational(-1, 2), 0)
        assert exponent.h == (-1, 1)

    def test_delta2_even_class_keeps_sign(self) -> None:
        image = delta2(parse_element("(1111)e^{(1000)}"))
        symbol, exponent, coefficient = image.terms[0]
        assert coefficient == 1
        assert exponent == Exponent.of_class(SphereClass.of("10"), -1)

    def test_half_diagonal_maslov(self) -> None:
        assert half_diagonal_maslov(Exponent.of_class(SphereClass.of("0100"))) == 2
        assert half_diagonal_maslov(Exponent.of_class(SphereClass.of("1000"), "1/2", 1)) == 1

    def test_tau_and_delta2_dispatch(self) -> None:
        over_x = parse_element(SEIDEL_EXPECTED)
        over_m = parse_element(SEIDEL_SOURCE)
        assert tau_and_delta2(over_x) == tau(over_x)
        assert tau_and_delta2(over_m) == delta2(over_m)


@pytest.mark.unit
class TestSeidelPushforward:
    def test_golden(self) -> None:
        image = albers_delta1_pushforward(parse_element(SEIDEL_SOURCE))
        assert format_element(image) == SEIDEL_EXPECTED

    @pytest.mark.parametrize("source, expected", SPLIT_LOOPS)
    def test_split_loops(self, source: str, expected: str) -> None:
        assert format_element(albers_delta1_pushforward(parse_element(source))) == expected

    def test_unknown_class(self) -> None:
        with pytest.raises(NovikovError) as exc:
            albers_delta1_pushforward(parse_element("(0000)e^{(1000)}"))
        assert exc.value.code is ErrorCode.UNKNOWN_CLASS

    def test_extra_table_entries(self) -> None:
        table = {ClassSymbol("0000"): (ClassSymbol("00"), -1)}
        image = albers_delta1_pushforward(parse_element("(0000)e^{(1000)}"), table)
        assert format_element(image) == "-(00)e^{(10)}"

    def test_verify_passes(self) -> None:
        report = verify_seidel_pushforward()
        assert report.status is VerificationStatus.PASS
        assert report.actual == report.expected == SEIDEL_EXPECTED
        assert all(report.split_checks.values())
        assert report.missing == report.unexpected == []

    def test_verify_reports_missing_terms(self) -> None:
        report = verify_seidel_pushforward(parse_element("(0111)e^{1/2*(1000)+h*[(0001)+(1000)]}"))
        assert report.status is VerificationStatus.FAIL
        assert report.missing == ["(10)e^{1/2*(10)+h*[(10)-(01)]}"]
        assert report.unexpected == []

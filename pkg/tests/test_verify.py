import pytest

from ribbonops.partitions import partitions_up_to
from ribbonops.qpoly import QPoly
from ribbonops.verify import (
    CHECKERS,
    DimensionReport,
    VerificationReport,
    _rank_bareiss,
    algebra_dimension,
    check_cauchy,
    check_h_commute,
    check_haction,
    check_heisenberg,
    check_relations,
    run_identity,
)


def test_every_checker_passes_at_desk_scale():
    for name, checker in CHECKERS.items():
        for n in (2, 3):
            rep = checker(n, 5)
            assert rep.ok, rep.summary()
            assert rep.cases > 0
            assert rep.identity == name
            js = rep.to_json()
            assert js["ok"] is True and js["failures"] == []


def test_run_identity_dispatch():
    rep = run_identity("relations", 2, 4)
    assert rep.ok and rep.identity == "relations"
    with pytest.raises(ValueError):
        run_identity("nonsense", 2, 4)


def test_checkers_accept_an_explicit_shape_list():
    rep = check_relations(3, 0, shapes=[(2, 1), (1,)])
    assert rep.ok and rep.cases > 0
    full = check_relations(3, 2)
    sliced = check_relations(3, 0, shapes=list(partitions_up_to(2)))
    assert full.cases == sliced.cases


def test_reports_count_failures():
    rep = VerificationReport("demo", 2, {})
    rep.tally(QPoly.one(), QPoly.one(), {"shape": "-"})
    rep.tally(QPoly.one(), QPoly.zero(), {"shape": "-"})
    assert rep.cases == 2 and not rep.ok
    assert "FAILED" in rep.summary()
    assert rep.to_json()["failures"][0]["lhs"] == "1"


def test_individual_checkers_expose_their_parameters():
    assert check_cauchy(2, 2, 2, 3).params == {"amax": 2, "bmax": 2, "max_size": 3}
    assert check_heisenberg(2, 2, 3).params == {"kmax": 2, "max_size": 3}
    assert check_h_commute(2, 3, 3).params == {"kmax": 3, "max_size": 3}
    assert check_haction(2, 1, 3).params == {"jmax": 1, "max_size": 3}


def test_bareiss_rank_on_integer_polynomials():
    one = QPoly.one()
    q = QPoly({1: 1})
    rows = [{0: one, 1: q}, {0: q, 1: q * q}, {1: one}]
    # row 2 = q * row 1 except for the last row, so rank is 2
    assert _rank_bareiss(rows, 2) == 2
    assert _rank_bareiss([{}], 2) == 0


def test_dimension_small_ranks():
    rep = algebra_dimension(1, 1)
    assert rep.rank == 2 and rep.stable
    assert all(r == 2 for r in rep.specialization_ranks)
    rep = algebra_dimension(1, 2)
    assert rep.rank == 5 and rep.stable
    rep2 = algebra_dimension(2, 1)
    assert rep2.rank == 4 and rep2.stable
    js = rep2.to_json()
    assert js["rank"] == 4 and js["residues"] == [0, 1]
    assert isinstance(rep2.summary(), str) and "stable" in rep2.summary()


def test_dimension_with_explicit_cutoff():
    rep = algebra_dimension(1, 1, max_size=4)
    assert isinstance(rep, DimensionReport)
    assert rep.rank == 2 and rep.rank_smaller == 2 and rep.stable
    # a cutoff that is still growing reports instability rather than lying
    low = algebra_dimension(1, 2, max_size=4)
    assert low.rank == 5 and low.rank_smaller == 4 and not low.stable


def test_dimension_residue_filter():
    # keeping only the empty residue class drops the basis but not the rank
    # for n = 1 (there is a single class)
    rep = algebra_dimension(1, 1, residues=(0,))
    assert rep.rank == 2

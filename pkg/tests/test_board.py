import json
import random

import pytest

from rookposet import (
    Cell,
    RootOrder,
    bruhat_leq,
    chains,
    compare_cells,
    diagonal_normalizer,
    empty_placement,
    enumerate_placements,
    from_json,
    inversions,
    involution_placement,
    kerov_involution,
    leq,
    permutation_of,
    placement,
    placement_from_rank_matrix,
    rank_matrix,
    to_json,
)
from rookposet import permutations as perms
from rookposet.errors import (
    AttackingRooks,
    BoardTooSmall,
    NotInvolution,
    OutOfBoard,
    SizeMismatch,
)
from fractions import Fraction


# --- validation -------------------------------------------------------------


def test_validate_golden(golden8):
    assert len(golden8.rooks) == 5
    assert [c.col for c in golden8.rooks] == [1, 2, 3, 4, 6]


def test_validate_empty():
    D = placement(4, [])
    assert D.rooks == ()


def test_validate_attacking_row_witness():
    with pytest.raises(AttackingRooks) as err:
        placement(4, [(3, 1), (3, 2)])
    assert err.value.witness == (Cell(3, 1), Cell(3, 2))
    assert err.value.axis == "row"


def test_validate_attacking_column():
    with pytest.raises(AttackingRooks) as err:
        placement(5, [(3, 2), (5, 2)])
    assert err.value.axis == "column"


@pytest.mark.parametrize("cell", [(2, 2), (1, 1), (9, 1), (3, 0), (2, 3)])
def test_validate_out_of_board(cell):
    with pytest.raises(OutOfBoard):
        placement(8, [cell])


def test_validate_bad_board_size():
    with pytest.raises(ValueError):
        placement(0, [])


def test_input_order_is_canonicalized():
    a = placement(6, [(6, 4), (3, 1), (5, 2)])
    b = placement(6, [(3, 1), (5, 2), (6, 4)])
    assert a == b
    assert [c.col for c in a.rooks] == [1, 2, 4]


# --- rank matrices ----------------------------------------------------------


def test_rank_matrix_golden(golden8, golden8_rank_table):
    assert rank_matrix(golden8).entries == golden8_rank_table


def test_rank_matrix_empty():
    R = rank_matrix(empty_placement(4))
    assert all(x == 0 for row in R.entries for x in row)


def _count_sw(D, i, j):
    return sum(1 for p, q in D.rooks if p >= i and q <= j)


def test_rank_matrix_single_rook_corner():
    D = placement(4, [(4, 1)])
    R = rank_matrix(D)
    for i in range(1, 5):
        for j in range(1, 5):
            expected = _count_sw(D, i, j) if i > j else 0
            assert R.entry(i, j) == expected
    assert all(R.entry(i, j) == 1 for i in range(2, 5) for j in range(1, i))


def test_rank_matrix_against_direct_count_oracle():
    rng = random.Random(42)
    pool = [D for n in range(1, 7) for D in enumerate_placements(n)]
    for D in rng.sample(pool, 60):
        R = rank_matrix(D)
        for i in range(1, D.n + 1):
            for j in range(1, D.n + 1):
                expected = _count_sw(D, i, j) if i > j else 0
                assert R.entry(i, j) == expected


def test_rank_matrix_neighbor_steps():
    # steps of 0 or 1 between adjacent cells, both inside the strict lower triangle
    for n in range(1, 6):
        for D in enumerate_placements(n):
            R = rank_matrix(D)
            for i in range(2, n + 1):
                for j in range(1, i):
                    if j > 1:
                        assert R.entry(i, j) - R.entry(i, j - 1) in (0, 1)
                    if i - 1 > j:
                        assert R.entry(i - 1, j) - R.entry(i, j) in (-1, 0, 1)


def test_reconstruction_round_trip_small_boards():
    for n in range(1, 6):
        for D in enumerate_placements(n):
            assert placement_from_rank_matrix(rank_matrix(D)) == D


# --- the partial order ------------------------------------------------------


def test_leq_remark_16iii_pair_is_incomparable():
    # The printed source claims these compare; the rank matrices say otherwise
    # (entry (4,3) is 1 vs 0 one way, entry (2,1) the other way).
    low = placement(4, [(3, 2), (4, 3)])
    high = placement(4, [(2, 1), (3, 2)])
    assert rank_matrix(low) != rank_matrix(high)
    assert not leq(low, high)
    assert not leq(high, low)


def test_leq_reflexive(golden8):
    assert leq(golden8, golden8)


def test_leq_remark_25_pair():
    chain = placement(4, [(2, 1), (3, 2), (4, 3)])
    orth = placement(4, [(3, 1), (4, 2)])
    assert leq(chain, orth)
    assert not leq(orth, chain)


def test_leq_size_mismatch():
    with pytest.raises(SizeMismatch):
        leq(empty_placement(3), empty_placement(4))


def test_partial_order_axioms_exhaustive():
    for n in range(1, 6):
        everything = enumerate_placements(n)
        ranks = [rank_matrix(D) for D in everything]
        # antisymmetry via injectivity of the rank matrix
        assert len(set(ranks)) == len(everything)
        le = [
            [ra.dominated_by(rb) for rb in ranks] for ra in ranks
        ]
        count = len(everything)
        for a in range(count):
            assert le[a][a]
            for b in range(count):
                if le[a][b] and le[b][a]:
                    assert a == b
                if le[a][b]:
                    for c in range(count):
                        if le[b][c]:
                            assert le[a][c]


# --- root order -------------------------------------------------------------


def test_compare_cells():
    assert compare_cells(Cell(5, 4), Cell(6, 2)) is RootOrder.LESS
    assert compare_cells(Cell(6, 2), Cell(5, 4)) is RootOrder.GREATER
    assert compare_cells(Cell(3, 2), Cell(4, 3)) is RootOrder.INCOMPARABLE
    assert compare_cells(Cell(4, 2), Cell(4, 2)) is RootOrder.EQUAL


# --- chains and permutations ------------------------------------------------


def test_chains_golden(golden8):
    decomp = chains(golden8)
    assert decomp.chains == ((1, 3, 7), (2, 6, 8), (4, 5))
    assert decomp.fixed_points == frozenset()


def test_chains_empty():
    decomp = chains(empty_placement(3))
    assert decomp.chains == ()
    assert decomp.fixed_points == {1, 2, 3}


def test_chains_derived(chain6):
    decomp = chains(chain6)
    assert decomp.chains == ((1, 3, 4, 6), (2, 5))
    assert decomp.fixed_points == frozenset()


def test_permutation_of(chain6, golden8):
    assert permutation_of(chain6) == (3, 5, 4, 6, 2, 1)
    assert permutation_of(empty_placement(5)) == (1, 2, 3, 4, 5)
    assert permutation_of(golden8) == (3, 6, 7, 5, 4, 8, 1, 2)


def test_permutation_matches_transposition_product():
    for n in range(1, 6):
        for D in enumerate_placements(n):
            via_product = perms.product_of_transpositions(
                n, [(c.row, c.col) for c in D.rooks]
            )
            assert permutation_of(D) == via_product


def test_permutation_support_is_chain_membership():
    for n in range(1, 7):
        for D in enumerate_placements(n):
            w = permutation_of(D)
            for i, j in D.rooks:
                assert w[j - 1] == i
            support = {x for x in range(1, n + 1) if w[x - 1] != x}
            members = {x for chain in chains(D).chains for x in chain}
            assert support == members


def test_inversions(chain6, golden8):
    assert inversions(permutation_of(chain6)) == 10
    assert inversions((1, 2, 3, 4)) == 0
    assert inversions(permutation_of(golden8)) == 17


# --- Kerov involutions ------------------------------------------------------


def test_kerov_golden(golden8):
    assert kerov_involution(golden8) == (4, 2, 10, 1, 12, 6, 8, 7, 9, 3, 14, 5, 13, 11)


def test_kerov_empty_and_single():
    assert kerov_involution(empty_placement(3)) == (1, 2, 3, 4)
    assert kerov_involution(placement(4, [(3, 2)])) == (1, 2, 4, 3, 5, 6)


def test_kerov_rejects_unit_board():
    with pytest.raises(BoardTooSmall):
        kerov_involution(empty_placement(1))


def test_kerov_is_involution_exhaustive():
    for n in range(2, 7):
        for D in enumerate_placements(n):
            sigma = kerov_involution(D)
            assert perms.compose(sigma, sigma) == perms.identity(2 * n - 2)


def test_involution_placement():
    assert involution_placement((1, 2, 3, 4, 5)) == empty_placement(5)
    assert involution_placement((1, 2, 4, 3, 5, 6)) == placement(6, [(4, 3)])
    with pytest.raises(NotInvolution):
        involution_placement((2, 3, 1))


def test_involution_placement_of_kerov(golden8):
    sigma = kerov_involution(golden8)
    expected = placement(14, [(4, 1), (10, 3), (12, 5), (8, 7), (14, 11)])
    assert involution_placement(sigma) == expected


# --- Bruhat comparison ------------------------------------------------------


def test_bruhat_identity_below_everything():
    import itertools

    for w in itertools.permutations(range(1, 5)):
        assert bruhat_leq((1, 2, 3, 4), w)


def test_bruhat_remark_25_incomparable():
    w = permutation_of(placement(4, [(2, 1), (3, 2), (4, 3)]))
    wp = permutation_of(placement(4, [(3, 1), (4, 2)]))
    assert not bruhat_leq(w, wp)
    assert not bruhat_leq(wp, w)


def test_bruhat_kerov_pair_tracks_placement_order():
    # Doubled involutions of the shifted-chain pair: incomparable, matching
    # the incomparability of the placements themselves.
    low = kerov_involution(placement(4, [(3, 2), (4, 3)]))
    high = kerov_involution(placement(4, [(2, 1), (3, 2)]))
    assert not bruhat_leq(low, high)
    assert not bruhat_leq(high, low)


def test_bruhat_cor18_oracle_remark_16iii():
    # Comparison of doubled involutions reduces to the rank matrices of
    # their orthogonal placements.
    low = involution_placement(kerov_involution(placement(4, [(3, 2), (4, 3)])))
    high = involution_placement(kerov_involution(placement(4, [(2, 1), (3, 2)])))
    assert not rank_matrix(low).dominated_by(rank_matrix(high))
    assert not rank_matrix(high).dominated_by(rank_matrix(low))


# --- normalizing diagonal ---------------------------------------------------


def test_diagonal_normalizer_golden(golden8):
    xi = {(3, 1): 2, (6, 2): 3, (7, 3): 5, (5, 4): 7, (8, 6): 11}
    t = diagonal_normalizer(golden8, xi)
    assert t == (
        Fraction(1),
        Fraction(1),
        Fraction(1, 2),
        Fraction(1),
        Fraction(1, 7),
        Fraction(1, 3),
        Fraction(1, 10),
        Fraction(1, 33),
    )


def test_diagonal_normalizer_empty():
    assert diagonal_normalizer(empty_placement(4), {}) == (1, 1, 1, 1)


def test_diagonal_normalizer_single_chain():
    assert diagonal_normalizer(placement(3, [(3, 1)]), {(3, 1): 4}) == (
        1,
        1,
        Fraction(1, 4),
    )


def test_diagonal_normalizer_rejects_zero():
    with pytest.raises(ValueError):
        diagonal_normalizer(placement(3, [(3, 1)]), {(3, 1): 0})


def test_diagonal_normalizer_rejects_wrong_domain():
    with pytest.raises(ValueError):
        diagonal_normalizer(placement(3, [(3, 1)]), {(2, 1): 1})


# --- JSON -------------------------------------------------------------------


def test_json_round_trip(golden8):
    blob = json.dumps(to_json(golden8))
    assert from_json(json.loads(blob)) == golden8


def test_json_accepts_unsorted_rooks():
    D = from_json({"n": 8, "rooks": [[8, 6], [3, 1], [5, 4], [7, 3], [6, 2]]})
    assert [c.col for c in D.rooks] == [1, 2, 3, 4, 6]


def test_json_rejects_missing_keys():
    with pytest.raises(ValueError):
        from_json({"rooks": []})

"""
Given the T⁴ torus of supernodes
When sites, neighbours and distances are queried
Then every supernode has one neighbour per leaf and opposite leaves lead back
"""
import numpy as np
import pytest

from hyperfoam.exceptions import LatticeError
from lattice.holonomy import opposite_leaf
from lattice.lattice import (
    TorusShape,
    ball_sizes,
    build_lattice,
    decode_ids,
    encode_coords,
    frontier_distances,
    opposite_columns,
    word_distance,
)
from lattice.supernode import Mode


class TestTorusShape:
    def test_counts(self):
        shape = TorusShape(3)
        assert shape.side == 6
        assert shape.supernode_count == 162

    @pytest.mark.parametrize("n", [0, -1, 2.5])
    def test_invalid(self, n):
        with pytest.raises(LatticeError):
            TorusShape(n)

    def test_ids_and_coordinates_agree(self):
        shape = TorusShape(3)
        ids = np.arange(shape.supernode_count)
        coords = decode_ids(shape, ids)
        assert (encode_coords(shape, coords) == ids).all()
        assert all(len({int(c) % 2 for c in row}) == 1 for row in coords)


class TestBuildLattice:
    def test_small_lattice(self, small_lattice):
        assert small_lattice.size == 162
        assert small_lattice.degree == 48
        assert small_lattice.neighbors.shape == (162, 48)

    def test_origin_and_odd_sublattice(self, small_lattice):
        assert small_lattice.coord(0) == (0, 0, 0, 0)
        assert small_lattice.site((1, 1, 1, 1)) == 81

    def test_coordinates_wrap(self, small_lattice):
        assert small_lattice.site((6, 0, -6, 12)) == 0

    def test_mixed_parity_rejected(self, small_lattice):
        with pytest.raises(LatticeError):
            small_lattice.site((1, 0, 0, 0))

    def test_neighbour_follows_leaf_direction(self, small_lattice):
        assert small_lattice.neighbor(0, 1) == small_lattice.site((2, 0, 0, 0))
        assert small_lattice.neighbor(0, 2) == small_lattice.site((2, 2, 0, 0))
        assert small_lattice.neighbor(0, 9) == small_lattice.site((1, 1, 1, 1))

    def test_opposite_leaf_leads_back(self, small_lattice):
        for K in small_lattice.leaves:
            there = small_lattice.neighbors[:, small_lattice.column(K)]
            back = small_lattice.neighbors[there, small_lattice.column(opposite_leaf(K))]
            assert (back == np.arange(small_lattice.size)).all()

    def test_opposite_columns(self, small_lattice):
        columns = opposite_columns(small_lattice)
        assert small_lattice.leaves[columns[0]] == 25

    def test_neighbours_are_distinct_from_n3(self, small_lattice):
        for row in small_lattice.neighbors[:5]:
            assert len(set(row.tolist())) == 48

    def test_parallel_links_need_multigraph(self):
        with pytest.raises(LatticeError, match="multigraph"):
            build_lattice(2)

    def test_multigraph_allows_small_tori(self):
        lattice = build_lattice(1, multigraph=True)
        assert lattice.size == 2
        assert lattice.neighbor(0, 1) == 0
        assert lattice.neighbor(0, 9) == 1

    def test_d4_mode_uses_first_shell_only(self):
        lattice = build_lattice(3, mode=Mode.D4)
        assert lattice.degree == 24
        with pytest.raises(LatticeError):
            lattice.column(2)

    def test_out_of_range_site(self, small_lattice):
        with pytest.raises(LatticeError):
            small_lattice.neighbor(162, 1)


class TestDistances:
    def test_word_distance(self, small_lattice):
        assert word_distance(small_lattice, 0, 0) == 0
        assert word_distance(small_lattice, 0, small_lattice.neighbor(0, 2)) == 1
        assert word_distance(small_lattice, 0, small_lattice.site((2, 2, 2, 0))) == 2

    def test_frontier_stops_at_rmax(self, small_lattice):
        distances = frontier_distances(small_lattice.neighbors, 0, rmax=1)
        assert int((distances == 0).sum()) == 1
        assert int((distances == 1).sum()) == 48
        assert int((distances < 0).sum()) == 162 - 49

    def test_frontier_skips_missing_half_edges(self):
        table = np.array([[1, -1], [0, 2], [1, -1], [-1, -1]])
        assert frontier_distances(table, 0).tolist() == [0, 1, 2, -1]

    def test_first_ball(self, small_lattice):
        profile = ball_sizes(small_lattice, 0, 1)
        assert profile.balls == (1, 49)
        assert profile.shells == (1, 48)

    @pytest.mark.slow
    def test_balls_on_n8(self):
        profile = ball_sizes(build_lattice(8), 0, 4)
        assert profile.balls == (1, 49, 433, 1825, 4771)

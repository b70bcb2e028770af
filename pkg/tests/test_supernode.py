"""
Given the supernode template built from the leaf code trees
When its structure is inspected
Then it is the 144-node trivalent graph with 48 leaves and 96 stubs
"""
import pytest

from hyperfoam.exceptions import LatticeError
from lattice.supernode import (
    EXT,
    LEAF_COUNT,
    Mode,
    NodeKind,
    bit,
    build_supernode,
    leaf_code,
    leaf_index,
    leaves_for,
)


class TestLeafCodes:
    def test_first_leaf_is_all_zero(self):
        code = leaf_code(1)
        assert code.beta == 0
        assert code.path == (0, 0, 0, 0)

    def test_last_leaf(self):
        code = leaf_code(48)
        assert (code.b5, code.b4) == (1, 0)
        assert code.beta == 2
        assert code.path == (1, 1, 1, 1)

    @pytest.mark.parametrize("K", range(1, LEAF_COUNT + 1))
    def test_index_round_trips(self, K):
        code = leaf_code(K)
        assert leaf_index(code.beta, *code.path) == K

    def test_siblings_pair_up(self):
        assert leaf_code(1).sibling == 2
        assert leaf_code(2).sibling == 1
        assert leaf_code(47).sibling == 48

    @pytest.mark.parametrize("K", [0, 49, -3])
    def test_out_of_range(self, K):
        with pytest.raises(LatticeError):
            leaf_code(K)

    def test_d4_keeps_plain_leaves_only(self):
        leaves = leaves_for(Mode.D4)
        assert len(leaves) == 24
        assert all(K % 2 == 1 for K in leaves)


class TestF4Template:
    def test_counts(self, supernode_template):
        assert supernode_template.node_count == 144
        assert len(supernode_template.edges()) == 168
        assert supernode_template.stub_count == 96
        assert len(supernode_template.leaves) == 48

    def test_bits(self, supernode_template):
        bits = supernode_template.bits
        assert int(bits.sum()) == 75
        assert int((bits == 0).sum()) == 69

    def test_kinds(self, supernode_template):
        kinds = supernode_template.kinds
        assert kinds[:3] == (NodeKind.CENTRAL_TRIANGLE,) * 3
        assert kinds.count(NodeKind.INTERNAL) == 45
        assert kinds.count(NodeKind.PLAIN_LEAF) == 24
        assert kinds.count(NodeKind.TRIANGLE_LEAF_MEMBER) == 72

    def test_every_node_is_trivalent_with_consistent_mates(self, supernode_template):
        ports, mates = supernode_template.ports, supernode_template.mates
        for u in range(supernode_template.node_count):
            for slot in range(3):
                v = int(ports[u, slot])
                if v == EXT:
                    continue
                assert ports[v, mates[u, slot]] == u
                assert mates[v, mates[u, slot]] == slot

    def test_each_leaf_owns_two_labelled_stubs(self, supernode_template):
        labels = supernode_template.stub_labels
        for K, leaf in supernode_template.leaves.items():
            assert int((labels == K).sum()) == 2
            for node, slot in leaf.stubs:
                assert supernode_template.ports[node, slot] == EXT

    def test_even_leaves_are_triangles(self, supernode_template):
        for K, leaf in supernode_template.leaves.items():
            assert leaf.is_triangle is (K % 2 == 0)

    def test_triangle_slot_layout(self, supernode_template):
        leaf = supernode_template.leaves[2]
        t0, t1, t2 = leaf.triangle
        ports = supernode_template.ports
        assert tuple(ports[t0]) == (leaf.parent, t1, t2)
        assert tuple(ports[t1]) == (t0, t2, EXT)
        assert tuple(ports[t2]) == (t0, t1, EXT)

    def test_plain_leaf_hangs_from_shared_parent(self, supernode_template):
        plain, triangle = supernode_template.leaves[1], supernode_template.leaves[2]
        assert plain.parent == triangle.parent
        assert tuple(supernode_template.ports[plain.holder]) == (plain.parent, EXT, EXT)

    def test_recomputed_bit_matches_cached(self, supernode_template):
        for node in range(supernode_template.node_count):
            assert bit(supernode_template, node) == supernode_template.bit(node)

    def test_template_is_read_only(self, supernode_template):
        with pytest.raises(ValueError):
            supernode_template.ports[0, 0] = 5

    def test_unknown_node(self, supernode_template):
        with pytest.raises(LatticeError):
            bit(supernode_template, 144)


class TestD4Template:
    def test_counts(self):
        template = build_supernode(Mode.D4)
        assert template.node_count == 48
        assert len(template.leaves) == 24
        assert template.stub_count == 48
        assert int(template.bits.sum()) == 3

import pytest

from matchbound import (
    GraphFamilySpec,
    StaleMoveError,
    SwapMove,
    apply_swap,
    build_graph,
    empty_matching,
    exact_max_matching,
    find_swap,
    generate,
    is_maximal,
    is_swap_stable,
    stabilize,
    validate_matching,
)


@pytest.fixture
def path4():
    return generate(GraphFamilySpec.path(4))


class TestFindSwap:
    def test_path_center_edge(self, path4):
        m = validate_matching(path4, [(1, 2)])
        move = find_swap(m)
        assert move == SwapMove(removed=(1, 2), added_1=(1, 0), added_2=(2, 3))

    def test_triangle_shared_singleton(self):
        g = build_graph(3, [(0, 1), (1, 2), (0, 2)])
        assert find_swap(validate_matching(g, [(0, 1)])) is None

    def test_two_triangles_stable(self):
        g = generate(GraphFamilySpec.triangles(2))
        m = validate_matching(g, [(0, 1), (3, 4)])
        assert find_swap(m) is None

    def test_lexicographically_smallest_pair(self):
        # star-of-paths: matched edge (2,3); N(2)={0,1}, N(3)={4,5}
        g = build_graph(6, [(0, 2), (1, 2), (2, 3), (3, 4), (3, 5)])
        move = find_swap(validate_matching(g, [(2, 3)]))
        assert move == SwapMove(removed=(2, 3), added_1=(2, 0), added_2=(3, 4))

    def test_skips_equal_singleton_takes_next(self):
        # N(0)={2,3}, N(1)={2}: pair (2,2) invalid, must pick (3,2)
        g = build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2)])
        move = find_swap(validate_matching(g, [(0, 1)]))
        assert move == SwapMove(removed=(0, 1), added_1=(0, 3), added_2=(1, 2))


class TestApplySwap:
    def test_path(self, path4):
        m = validate_matching(path4, [(1, 2)])
        out = apply_swap(m, find_swap(m))
        assert out.matched_edges == ((0, 1), (2, 3))
        assert out.size == m.size + 1

    def test_cycle6(self):
        g = generate(GraphFamilySpec.cycle(6))
        m = validate_matching(g, [(0, 1), (3, 4)])
        move = SwapMove(removed=(0, 1), added_1=(0, 5), added_2=(1, 2))
        out = apply_swap(m, move)
        assert out.matched_edges == ((0, 5), (1, 2), (3, 4))
        assert out.size == 3

    def test_result_revalidates(self):
        for seed_id in range(20):
            g = generate(GraphFamilySpec.random(10, "1/2", seed_id))
            m = empty_matching(g)
            while True:
                move = find_swap(m)
                if move is None:
                    break
                m = apply_swap(m, move)
                # re-validation must not raise
                validate_matching(g, m.matched_edges)

    def test_stale_move(self, path4):
        m = validate_matching(path4, [(1, 2)])
        move = find_swap(m)
        advanced = apply_swap(m, move)
        with pytest.raises(StaleMoveError):
            apply_swap(advanced, move)


class TestStabilize:
    def test_path4_reaches_maximum(self, path4):
        assert stabilize(path4).size == 2

    @pytest.mark.parametrize("r", [1, 2, 3, 5, 8])
    def test_triangles_exact(self, r):
        g = generate(GraphFamilySpec.triangles(r))
        assert stabilize(g).size == r

    def test_complete4(self):
        assert stabilize(generate(GraphFamilySpec.complete(4))).size == 2

    def test_empty_graph(self):
        assert stabilize(build_graph(0, [])).size == 0

    def test_seed_respected(self):
        g = generate(GraphFamilySpec.cycle(6))
        seed = validate_matching(g, [(1, 2)])
        out = stabilize(g, seed)
        assert out.size >= seed.size
        assert (1, 2) in out.matched_edges or out.size > seed.size

    def test_output_invariants(self):
        for seed_id in range(30):
            g = generate(GraphFamilySpec.random(12, "3/10", seed_id))
            out = stabilize(g)
            assert is_maximal(out)
            assert is_swap_stable(out)
            k_exact = exact_max_matching(g).size
            assert out.size <= k_exact
            assert 3 * out.size >= 2 * k_exact

    def test_deterministic(self):
        g = generate(GraphFamilySpec.random(14, "1/2", 5))
        assert stabilize(g).matched_edges == stabilize(g).matched_edges

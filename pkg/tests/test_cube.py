"""Cube of resolutions: smoothing, gradings, differentials, annular filtering."""

import random

import pytest

from skylink.cube import (build_akh_complex, build_kh_complex, dump_complex,
                          smooth)
from skylink.diagrams import (BraidWord, annular_to_planar, braid_closure,
                              model_link, parse_braid, parse_pd)
from skylink.errors import ResourceLimitError
from skylink.gf2 import multiply

from oracles import braid_resolution_circles


def test_smooth_hopf():
    hopf = model_link("hopf_positive")
    assert smooth(hopf, 0b00).count == 2
    assert smooth(hopf, 0b10).count == 1
    assert smooth(hopf, 0b01).count == 1
    assert smooth(hopf, 0b11).count == 2


def test_smooth_u2_planarization():
    u2 = annular_to_planar(model_link("U2"), mark_axis=True)
    circles = smooth(u2, 0)
    assert circles.count == 2
    assert circles.essential == (True, True)


def test_smooth_rejects_bad_resolution():
    with pytest.raises(ValueError):
        smooth(model_link("hopf_positive"), 0b100)


def test_smooth_deterministic_under_crossing_permutation():
    d1 = parse_pd("X(1,3,2,4) X(3,1,4,2)")
    d2 = parse_pd("X(3,1,4,2) X(1,3,2,4)")
    for r in range(4):
        # crossing order is swapped, so swap the resolution bits too
        swapped = ((r & 1) << 1) | (r >> 1)
        a = smooth(d1, r)
        b = smooth(d2, swapped)
        assert a.count == b.count


def test_unknot_complex():
    cc = build_kh_complex(model_link("unknot"))
    assert set(cc.blocks) == {1, -1}
    for j in (1, -1):
        assert cc.blocks[j].dims == {0: 1}
        assert not cc.blocks[j].maps


def test_hopf_chain_dims_by_i():
    cc = build_kh_complex(model_link("hopf_positive"))
    by_i = {}
    for block in cc.blocks.values():
        for i, dim in block.dims.items():
            by_i[i] = by_i.get(i, 0) + dim
    # 2^2 + 2^1 + 2^1 + 2^2 generators across the four resolutions
    assert by_i == {0: 4, 1: 4, 2: 4}
    assert cc.total_generators() == 12


def test_generator_count_is_two_to_circles():
    d = annular_to_planar(braid_closure(parse_braid("1 -1 1", 2)))
    n = d.crossing_count
    total = sum(2 ** smooth(d, r).count for r in range(1 << n))
    cc = build_kh_complex(d)
    assert cc.total_generators() == total


def test_j_parity_matches_component_count():
    for word, strands in (("1 1", 2), ("1", 2), ("1 2", 3), ("", 3)):
        d = annular_to_planar(braid_closure(parse_braid(word, strands)))
        cc = build_kh_complex(d)
        for j in cc.blocks:
            assert (j - d.component_count) % 2 == 0


def test_akh_u2_blocks():
    cc = build_akh_complex(model_link("U2"))
    dims = {key: block.dims for key, block in cc.blocks.items()}
    assert dims == {(2, 2): {0: 1}, (0, 0): {0: 2}, (-2, -2): {0: 1}}


def test_d_squared_zero_exhaustive():
    diagrams = [
        model_link("hopf_positive"),
        model_link("P3"),
        annular_to_planar(braid_closure(parse_braid("1 1 1", 2))),
        annular_to_planar(braid_closure(parse_braid("-1 2 -1 2", 3))),
        parse_pd("X(1,1,2,2)"),
    ]
    for d in diagrams:
        cc = build_kh_complex(d)
        cc.check_integrity()
        for block in cc.blocks.values():
            for i, m in block.maps.items():
                nxt = block.maps.get(i + 1)
                if nxt is not None:
                    assert multiply(m, nxt).nnz() == 0
    for word, strands in (("1 1", 2), ("1 -1", 2), ("1 2 1", 3)):
        build_akh_complex(braid_closure(parse_braid(word, strands))).check_integrity()


def test_annular_complex_drops_k_lowering_entries():
    # same generators as the planar cube; strictly fewer entries because
    # the k-lowering part of the differential is removed
    d = braid_closure(parse_braid("-1 -1", 2))
    akh_cc = build_akh_complex(d)
    kh_cc = build_kh_complex(annular_to_planar(d))
    assert akh_cc.total_generators() == kh_cc.total_generators()
    akh_entries = sum(m.nnz() for b in akh_cc.blocks.values() for m in b.maps.values())
    kh_entries = sum(m.nnz() for b in kh_cc.blocks.values() for m in b.maps.values())
    assert akh_entries < kh_entries


def test_block_euler_telescoping():
    # per block: sum (-1)^i dim C_i = sum (-1)^i H_i, exactly
    from skylink.gf2 import homology_dims
    diagrams = [
        model_link("hopf_positive"),
        model_link("P3"),
        annular_to_planar(braid_closure(parse_braid("1 1 1", 2))),
        annular_to_planar(braid_closure(parse_braid("1 -2 1", 3))),
    ]
    for d in diagrams:
        cc = build_kh_complex(d)
        for key, block in cc.blocks.items():
            chain_sum = sum((-1) ** i * dim for i, dim in block.dims.items())
            hom_sum = 0
            for i in sorted(block.dims):
                d_out = block.map_out_of(i)
                d_in = block.maps.get(i - 1) or block.map_out_of(i - 1)
                hom_sum += (-1) ** i * homology_dims(d_in, d_out)
            assert chain_sum == hom_sum, key


def test_crossing_limit():
    d = braid_closure(parse_braid("1 1 1 1", 2))
    with pytest.raises(ResourceLimitError, match="limit of 3"):
        build_akh_complex(d, crossing_limit=3)
    with pytest.raises(ResourceLimitError):
        build_kh_complex(annular_to_planar(d), crossing_limit=3)


def test_essential_flags_match_winding_simulator():
    rng = random.Random(31)
    for _ in range(80):
        strands = rng.randint(1, 4)
        length = rng.randint(0, 6) if strands > 1 else 0
        letters = tuple(rng.choice((1, -1)) * rng.randint(1, strands - 1)
                        for _ in range(length))
        word = BraidWord(strands, letters)
        planar = annular_to_planar(braid_closure(word), mark_axis=True)
        for r in range(1 << length):
            circles = smooth(planar, r)
            windings = braid_resolution_circles(letters, strands, r)
            assert all(abs(w) <= 1 for w in windings)
            assert circles.count == len(windings)
            essential = sum(1 for e in circles.essential if e)
            assert essential == sum(1 for w in windings if w != 0)


def test_dump_complex_mentions_blocks():
    text = dump_complex(build_kh_complex(model_link("hopf_positive")))
    assert "block j=" in text and "d[" in text
    text = dump_complex(build_akh_complex(model_link("U2")))
    assert "k=" in text

import numpy as np
import pytest

from sdcma.baselines import SchemeKind, build_scheme, constellation_for, default_subspace_size
from sdcma.config import ScenarioConfig
from sdcma.constellation import make_tetrahedron
from sdcma.errors import UnsupportedCombination
from sdcma.harness import receive, run_point
from sdcma.power import joint_constellation, normalize_ratios
from sdcma.s2d import SubspaceLayout, parse_strategy


def test_pd_noma_full_overlap():
    s = build_scheme(SchemeKind.PD_NOMA, 2, "qpsk")
    assert s.P == 2 and s.rows == ((1, 2), (1, 2))


def test_pd_sdcma_five_groups_matches_table():
    s = build_scheme("PD_SDCMA", 5, "qpsk")
    assert s.P == 5
    assert s.rows == parse_strategy("[1 2;2 3;3 4;4 5;5 1]").rows


@pytest.mark.parametrize("g, P", [(1, 2), (2, 3), (3, 3), (5, 5)])
def test_default_subspace_size(g, P):
    assert default_subspace_size(g) == P


def test_3d_noma_joint_has_64_points():
    s = build_scheme(SchemeKind.NOMA_3D, 3, make_tetrahedron())
    assert s.P == 3 and all(r == (1, 2, 3) for r in s.rows)
    pts, _ = joint_constellation(list(zip(s.constellations, s.rows)), normalize_ratios([16, 4, 1]), 3)
    assert len({tuple(p) for p in pts.round(12)}) == 64


def test_rate_parity_3d_noma_vs_sdcma():
    N = 512
    sd = build_scheme(SchemeKind.PD_SDCMA, 3, "qpsk")
    nd = build_scheme(SchemeKind.NOMA_3D, 3, "tetra")
    bits_sd = SubspaceLayout(N, sd.P).count * sd.constellations[0].bits_per_symbol
    bits_nd = SubspaceLayout(N, nd.P).count * nd.constellations[0].bits_per_symbol
    assert bits_sd == bits_nd


@pytest.mark.parametrize(
    "kind, g, spec",
    [(SchemeKind.NOMA_3D, 2, "qpsk"), (SchemeKind.PD_NOMA, 2, "tetra"), (SchemeKind.PD_SDCMA, 0, "qpsk")],
)
def test_unsupported(kind, g, spec):
    with pytest.raises(UnsupportedCombination):
        build_scheme(kind, g, spec)


def test_constellation_substitution():
    assert constellation_for(SchemeKind.NOMA_3D, "qpsk") == "tetra"
    assert constellation_for(SchemeKind.PD_NOMA, "16qam") == "16qam"
    with pytest.raises(UnsupportedCombination):
        constellation_for(SchemeKind.NOMA_3D, "16qam")


def test_scheme_parse_aliases():
    assert SchemeKind.parse("3d-noma") is SchemeKind.NOMA_3D
    assert SchemeKind.parse("pd-sdcma") is SchemeKind.PD_SDCMA
    with pytest.raises(UnsupportedCombination):
        SchemeKind.parse("ofdma")


def test_single_group_schemes_are_identical():
    cfg = ScenarioConfig(
        schemes=(SchemeKind.PD_SDCMA, SchemeKind.PD_NOMA), ratios=(1.0,), symbols_per_point=20
    )
    a = receive(cfg, SchemeKind.PD_SDCMA, -9.0, 4)
    b = receive(cfg, SchemeKind.PD_NOMA, -9.0, 4)
    np.testing.assert_array_equal(a.tx_bits[0], b.tx_bits[0])
    np.testing.assert_array_equal(a.rx_frames, b.rx_frames)
    # the transmitted waveforms themselves
    lay = SubspaceLayout(512, 2)
    assert a.scheme.P == b.scheme.P == lay.P
    recs = run_point(cfg, -9.0, 4)
    assert (recs[0].bits_total, recs[0].bits_error) == (recs[1].bits_total, recs[1].bits_error)

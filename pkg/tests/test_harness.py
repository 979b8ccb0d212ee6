import dataclasses
import random

import pytest

from foldedrs.frs import FRSParams, encode, folded_agreement, read_word
from foldedrs.harness import (
    BOUNDS_HEADER,
    SIMULATE_HEADER,
    ChannelSpec,
    apply_channel,
    emit_bound_curves,
    oracle_decode,
    pipeline_threshold,
    run_cli,
    simulate,
    simulate_csv,
)
from foldedrs.poly import UniPoly

P13 = FRSParams(q=13, m=3, k=2, s=2, r=3)


# ---------------------------------------------------------------------------
# channel
# ---------------------------------------------------------------------------


def test_channel_zero_errors_is_identity():
    cw = encode(P13, UniPoly.from_ints(P13.field, [1, 2, 3]))
    out = apply_channel(cw, ChannelSpec(kind="uniform", e=0, seed=1), q=13)
    assert out == cw


@pytest.mark.parametrize("kind", ["uniform", "burst"])
@pytest.mark.parametrize("e", [1, 2, 4])
def test_channel_distance_exactly_e(kind, e):
    cw = encode(P13, UniPoly.from_ints(P13.field, [5, 6, 7]))
    for seed in range(10):
        out = apply_channel(cw, ChannelSpec(kind=kind, e=e, seed=seed), q=13)
        assert P13.N - folded_agreement(cw, out) == e


def test_channel_burst_is_contiguous():
    cw = encode(P13, UniPoly.from_ints(P13.field, [5, 6, 7]))
    for seed in range(10):
        out = apply_channel(cw, ChannelSpec(kind="burst", e=2, seed=seed), q=13)
        bad = [j for j in range(P13.N) if out[j] != cw[j]]
        assert len(bad) == 2
        d = (bad[1] - bad[0]) % P13.N
        assert d == 1 or d == P13.N - 1


def test_channel_full_corruption():
    cw = encode(P13, UniPoly.from_ints(P13.field, [0, 0, 1]))
    out = apply_channel(cw, ChannelSpec(kind="uniform", e=P13.N, seed=3), q=13)
    assert all(a != b for a, b in zip(cw, out))


def test_channel_rejects_too_many_errors():
    cw = encode(P13, UniPoly.from_ints(P13.field, [0, 0, 1]))
    with pytest.raises(ValueError):
        apply_channel(cw, ChannelSpec(kind="uniform", e=P13.N + 1, seed=0), q=13)


def test_channel_fixed_positions_and_values():
    cw = encode(P13, UniPoly.from_ints(P13.field, [1, 1, 1]))
    spec = ChannelSpec(
        kind="fixed-positions",
        e=2,
        positions=(0, 2),
        values=((9, 9, 9), (8, 8, 8)),
    )
    out = apply_channel(cw, spec, q=13)
    assert out[0] == (9, 9, 9) and out[2] == (8, 8, 8)
    assert out[1] == cw[1] and out[3] == cw[3]


def test_channel_fixed_positions_validation():
    cw = encode(P13, UniPoly.from_ints(P13.field, [1, 1, 1]))
    with pytest.raises(ValueError):
        apply_channel(cw, ChannelSpec(kind="fixed-positions", e=2, positions=(1,)), q=13)
    with pytest.raises(ValueError):
        apply_channel(
            cw,
            ChannelSpec(kind="fixed-positions", e=1, positions=(1,), values=(tuple(cw[1]),)),
            q=13,
        )


# ---------------------------------------------------------------------------
# oracle
# ---------------------------------------------------------------------------


def test_oracle_examples():
    p = FRSParams(q=5, m=2, k=1, s=2, r=1)
    f = UniPoly.from_ints(p.field, [2, 3])
    cw = encode(p, f)
    assert oracle_decode(p, cw, p.N) == {f}
    assert len(oracle_decode(p, cw, 0)) == 5**2


def test_oracle_contains_planted_at_agreement():
    msg = UniPoly.from_ints(P13.field, [3, 1, 4])
    cw = encode(P13, msg)
    recv = apply_channel(cw, ChannelSpec(kind="uniform", e=1, seed=5), q=13)
    t = folded_agreement(cw, recv)
    assert msg in oracle_decode(P13, recv, t)


def test_oracle_budget():
    p = FRSParams(q=31, m=2, k=4, s=1, r=1)
    word = tuple((0, 0) for _ in range(p.N))
    with pytest.raises(ValueError):
        oracle_decode(p, word, 1)


# ---------------------------------------------------------------------------
# simulate and CSV emitters
# ---------------------------------------------------------------------------


def test_simulate_reproducible_modulo_walltime():
    p = FRSParams(q=13, m=3, k=2, s=2, r=2)
    a = simulate(p, "uniform", 1, 3, seed=21)
    b = simulate(p, "uniform", 1, 3, seed=21)
    strip = lambda recs: [dataclasses.replace(rec, ms=0.0) for rec in recs]
    assert strip(a) == strip(b)
    csv_a = "\n".join(",".join(line.split(",")[:-1]) for line in simulate_csv(a).splitlines())
    csv_b = "\n".join(",".join(line.split(",")[:-1]) for line in simulate_csv(b).splitlines())
    assert csv_a == csv_b


def test_simulate_csv_columns():
    p = FRSParams(q=13, m=2, k=1, s=2, r=1)
    text = simulate_csv(simulate(p, "burst", 1, 2, seed=0))
    lines = text.strip().splitlines()
    assert lines[0] == SIMULATE_HEADER
    assert len(lines) == 3
    first = lines[1].split(",")
    assert first[:9] == ["13", "2", "1", "2", "1", "standard", "burst", "1", "0"]
    assert first[9] in ("0", "1")


def test_bound_curves_csv():
    text = emit_bound_curves([4], [2], 1000, 0.01)
    lines = text.strip().splitlines()
    assert lines[0] == BOUNDS_HEADER
    row = next(l for l in lines if l.startswith("0.250000"))
    cells = row.split(",")
    assert cells[1] == "0.500000"  # rho_gs(0.25)
    assert cells[7] == "0.750000"  # capacity
    # clamped rows carry an exact zero
    row9 = next(l for l in lines if l.startswith("0.990000"))
    assert float(row9.split(",")[2]) >= 0.0


def test_bound_curves_multi_pairs_have_keys():
    text = emit_bound_curves([4, 5], [2], 1000, 0.25)
    lines = text.strip().splitlines()
    assert lines[0] == "m,s," + BOUNDS_HEADER
    assert lines[1].startswith("4,2,")
    assert any(l.startswith("5,2,") for l in lines)


# ---------------------------------------------------------------------------
# CLI
# ---------------------------------------------------------------------------


def test_cli_encode_example(tmp_path, capsys):
    msgf, cwf = tmp_path / "msg.txt", tmp_path / "cw.txt"
    msgf.write_text("0 1\n")
    rc = run_cli(["encode", "--q", "5", "--m", "2", "--k", "1",
                  "--in", str(msgf), "--out", str(cwf)])
    assert rc == 0
    assert cwf.read_text() == "1 2\n4 3\n"


def test_cli_decode_uncorrupted(tmp_path, capsys):
    msgf, cwf = tmp_path / "msg.txt", tmp_path / "cw.txt"
    msgf.write_text("7 3 11\n")
    assert run_cli(["encode", "--q", "13", "--m", "3", "--k", "2",
                    "--in", str(msgf), "--out", str(cwf)]) == 0
    rc = run_cli(["decode", "--q", "13", "--m", "3", "--k", "2", "--s", "2", "--r", "3",
                  "--in", str(cwf)])
    assert rc == 0
    out = capsys.readouterr().out
    assert "7 3 11" in out.splitlines()


def test_cli_corrupt_then_decode_roundtrip(tmp_path, capsys):
    msgf = tmp_path / "msg.txt"
    cwf = tmp_path / "cw.txt"
    rxf = tmp_path / "rx.txt"
    msgf.write_text("1 0 12\n")
    assert run_cli(["encode", "--q", "13", "--m", "3", "--k", "2",
                    "--in", str(msgf), "--out", str(cwf)]) == 0
    assert run_cli(["corrupt", "--q", "13", "--m", "3", "--k", "2", "--errors", "1",
                    "--seed", "4", "--in", str(cwf), "--out", str(rxf)]) == 0
    p = FRSParams(q=13, m=3, k=2)
    cw = read_word(str(cwf), p)
    rx = read_word(str(rxf), p)
    assert p.N - folded_agreement(cw, rx) == 1
    rc = run_cli(["decode", "--q", "13", "--m", "3", "--k", "2", "--s", "2", "--r", "3",
                  "--in", str(rxf)])
    assert rc == 0
    assert "1 0 12" in capsys.readouterr().out.splitlines()


def test_cli_oracle_matches_decode(tmp_path, capsys):
    msgf, cwf = tmp_path / "m.txt", tmp_path / "c.txt"
    msgf.write_text("2 5 0\n")
    run_cli(["encode", "--q", "13", "--m", "3", "--k", "2", "--in", str(msgf), "--out", str(cwf)])
    rc = run_cli(["decode", "--q", "13", "--m", "3", "--k", "2", "--s", "2", "--r", "3",
                  "--in", str(cwf)])
    decoded = capsys.readouterr().out
    rc2 = run_cli(["oracle", "--q", "13", "--m", "3", "--k", "2", "--s", "2", "--r", "3",
                   "--in", str(cwf)])
    oracled = capsys.readouterr().out
    assert rc == 0 and rc2 == 0
    assert sorted(decoded.splitlines()) == sorted(oracled.splitlines())


def test_cli_recover(tmp_path, capsys):
    p = FRSParams(q=13, m=3, k=1, s=2, r=2)
    msg = UniPoly.from_ints(p.field, [4, 9])
    cw = encode(p, msg)
    setsf = tmp_path / "sets.txt"
    rng = random.Random(0)
    lines = []
    for sym in cw:
        other = tuple(rng.randrange(13) for _ in range(3))
        lines.append(",".join(map(str, sym)) + ";" + ",".join(map(str, other)))
    setsf.write_text("\n".join(lines) + "\n")
    rc = run_cli(["recover", "--q", "13", "--m", "3", "--k", "1", "--s", "2", "--r", "2",
                  "--l", "2", "--in", str(setsf)])
    assert rc == 0
    assert "4 9" in capsys.readouterr().out.splitlines()


def test_cli_simulate_and_bounds_files(tmp_path):
    simf = tmp_path / "trials.csv"
    rc = run_cli(["simulate", "--q", "13", "--m", "3", "--k", "2", "--s", "2", "--r", "3",
                  "--errors", "1", "--trials", "2", "--seed", "9", "--out", str(simf)])
    assert rc == 0
    lines = simf.read_text().strip().splitlines()
    assert lines[0] == SIMULATE_HEADER
    assert len(lines) == 3

    curvesf = tmp_path / "curves.csv"
    rc = run_cli(["bounds", "--m", "4", "--s", "2", "--r", "1000", "--out", str(curvesf)])
    assert rc == 0
    lines = curvesf.read_text().strip().splitlines()
    assert lines[0] == BOUNDS_HEADER
    assert any(l.startswith("0.250000,0.500000") for l in lines)


def test_cli_exit_codes(tmp_path):
    msgf = tmp_path / "msg.txt"
    msgf.write_text("0 1\n")
    # unknown flag -> 64
    assert run_cli(["encode", "--q", "5", "--m", "2", "--k", "1", "--frob", "9",
                    "--in", str(msgf), "--out", str(tmp_path / "o")]) == 64
    # unknown subcommand -> 64
    assert run_cli(["transmogrify"]) == 64
    # missing input file -> 2
    assert run_cli(["encode", "--q", "5", "--m", "2", "--k", "1",
                    "--in", str(tmp_path / "nope.txt"), "--out", str(tmp_path / "o")]) == 2
    # malformed message file -> 2
    bad = tmp_path / "bad.txt"
    bad.write_text("1 2 3 4\n")
    assert run_cli(["encode", "--q", "5", "--m", "2", "--k", "1",
                    "--in", str(bad), "--out", str(tmp_path / "o")]) == 2


def test_cli_parameter_rejection_is_exit_1(tmp_path):
    # q=5, m=4, s=1, r=3 trips the Y-degree check inside interpolation
    wordf = tmp_path / "w.txt"
    wordf.write_text("0 0 0 0\n")
    rc = run_cli(["decode", "--q", "5", "--m", "4", "--k", "1", "--s", "1", "--r", "3",
                  "--in", str(wordf)])
    assert rc == 1


def test_pipeline_threshold_matches_decode():
    msg = UniPoly.from_ints(P13.field, [1, 2, 3])
    res_t = pipeline_threshold(P13)
    from foldedrs.decoder import list_decode

    assert list_decode(P13, encode(P13, msg)).t == res_t

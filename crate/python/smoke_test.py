#!/usr/bin/env python3
"""Smoke test for the `fascicle` extension module.

Builds are looked up in the cargo target directory, so after

    cargo build -p fascicle-py          (or --release)

this script runs with no further setup:

    python3 python/smoke_test.py
"""

import math
import shutil
import sys
import tempfile
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent


def import_fascicle():
    try:
        import fascicle  # already installed or on sys.path

        return fascicle
    except ImportError:
        pass
    candidates = [
        REPO / "target" / "release" / "libfascicle.so",
        REPO / "target" / "debug" / "libfascicle.so",
    ]
    built = [p for p in candidates if p.exists()]
    if not built:
        sys.exit("libfascicle.so not found; run `cargo build -p fascicle-py` first")
    newest = max(built, key=lambda p: p.stat().st_mtime)
    staging = Path(tempfile.mkdtemp(prefix="fascicle-py-"))
    shutil.copy2(newest, staging / "fascicle.so")
    sys.path.insert(0, str(staging))
    import fascicle

    return fascicle


def close(a, b, rel=1e-9):
    return abs(a - b) <= rel * max(abs(a), abs(b), 1e-300)


def main():
    fas = import_fascicle()

    # parameter resolution: L = 145 mm, D = 17 mm, N = 16
    braid, theta = fas.resolve(0.145, 0.017, 16.0)
    assert close(braid.fiber_length, 0.866728222691632), braid.fiber_length
    assert close(math.degrees(theta), 80.36937121145954), math.degrees(theta)
    assert close(fas.length_of(braid, theta), 0.145)
    assert close(fas.diameter_of(braid, theta), 0.017)

    # the measured angle 75.2 deg is not consistent with (L, D, N)
    report = fas.check_consistency(0.145, 0.017, 16.0, theta=math.radians(75.2))
    assert not report.consistent
    resolved = fas.check_consistency(0.145, 0.017, 16.0, theta=theta, tolerance=1e-9)
    assert resolved.consistent

    # forces at the reference state, per kPa
    wall = fas.WallSpec.absolute(0.001)
    assert close(fas.force_thin(braid, theta, 1000.0), -0.21390884782144426)
    assert close(fas.force_thick(braid, theta, wall, 1000.0), -0.165181156116998)

    # pack vs equivalent comparison over the standard counts
    design = fas.ActuatorDesign(braid, wall, theta)
    rows = fas.compare(design, [1, 2, 4, 8, 16, 32, 64])
    assert all(close(r.pack, r.equivalent_relative, rel=1e-12) for r in rows)
    assert all(abs(r.equivalent_absolute) > abs(r.pack) for r in rows if r.n > 1)
    assert close(rows[-1].pack * 1e3, -10.571593991487871)

    # thin-wall equality theorem, computed both ways
    pack, eq = fas.equality_theorem_thin(braid, theta, 7)
    assert close(pack, eq, rel=1e-12)

    # the impossible fixed-turn-count equivalent is flagged
    bad = fas.fixed_turns_equivalent_report(design, 4)
    assert not bad.consistent

    # energy audit over an extension stroke
    stroke = fas.StrokeSpec(theta, math.radians(70.0))
    dv = fas.delta_volume(braid, stroke)
    work = fas.work_integral(braid, stroke, 1000.0)
    assert close(work, -1000.0 * dv), (work, dv)
    energy = fas.pack_vs_equivalent_energy(braid, 4, stroke, 1000.0)
    assert energy.volumes_match
    assert close(energy.f_avg_pack, energy.f_avg_equivalent, rel=1e-12)

    # normalized-force anchors
    assert fas.normalized_force(math.pi / 2, 0.0) == -1.0
    assert close(
        math.degrees(fas.zero_force_angle(0.0)), 54.735610317245346
    )

    # domain errors surface as ValueError
    try:
        fas.length_of(braid, 0.0)
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError for theta = 0")

    print("fascicle python smoke test: all checks passed")


if __name__ == "__main__":
    main()

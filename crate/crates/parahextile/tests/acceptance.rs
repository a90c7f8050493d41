//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any
//! failure. Built without the libtest harness so the lines always show.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::Instant;

use parahextile_core::*;
use serde_json::Value;

type Outcome = Result<(), String>;
type Check = fn() -> Outcome;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        let ok: bool = $cond;
        if !ok {
            return Err(format!($($msg)+));
        }
    };
}

fn deg(d: i64) -> AngleDeg {
    AngleDeg::from_int(d)
}

fn cli(args: &[&str]) -> Result<Value, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_parahextile"))
        .args(args)
        .output()
        .map_err(|e| format!("spawn: {e}"))?;
    ensure!(out.status.success(), "{args:?} exited with {}", out.status);
    serde_json::from_slice(&out.stdout).map_err(|e| format!("{args:?}: bad JSON: {e}"))
}

/// Hundredths of a degree from a two-decimal table entry.
fn hundredths(s: &str) -> i64 {
    let (int, frac) = s.split_once('.').unwrap_or((s, ""));
    let frac = format!("{frac:0<2}");
    int.parse::<i64>().unwrap() * 100 + frac.parse::<i64>().unwrap()
}

/// Compare the rounded A, B, C of a `hexagon` report with a table row.
fn check_row(report: &Value, label: &str, a: &str, bc: &str) -> Outcome {
    let rounded = &report["rounded"];
    for (key, want) in [
        ("A", a),
        ("B", bc),
        ("C", bc),
        ("D", a),
        ("E", bc),
        ("F", bc),
    ] {
        let got = rounded[key]
            .as_str()
            .ok_or(format!("{label}: no rounded {key}"))?;
        ensure!(
            hundredths(got) == hundredths(want),
            "{label}: {key} = {got}, expected {want}"
        );
    }
    Ok(())
}

// (n, A, B = C), two decimals
const ROTATIONAL_ROWS: [(i64, &str, &str); 16] = [
    (3, "120", "120"),
    (4, "90", "135"),
    (5, "72", "144"),
    (6, "60", "150"),
    (7, "51.43", "154.29"),
    (8, "45", "157.5"),
    (9, "40", "160"),
    (10, "36", "162"),
    (11, "32.73", "163.64"),
    (12, "30", "165"),
    (13, "27.69", "166.15"),
    (14, "25.71", "167.14"),
    (15, "24", "168"),
    (16, "22.5", "168.75"),
    (17, "21.18", "169.41"),
    (18, "20", "170"),
];

// (m, A, B = C, matching n when m is even)
const HOLE_ROWS: [(i64, &str, &str, Option<i64>); 21] = [
    (5, "144", "108", None),
    (6, "120", "120", Some(3)),
    (7, "102.86", "128.57", None),
    (8, "90", "135", Some(4)),
    (9, "80", "140", None),
    (10, "72", "144", Some(5)),
    (11, "65.45", "147.27", None),
    (12, "60", "150", Some(6)),
    (13, "55.38", "152.31", None),
    (14, "51.43", "154.29", Some(7)),
    (15, "48", "156", None),
    (16, "45", "157.5", Some(8)),
    (17, "42.35", "158.82", None),
    (18, "40", "160", Some(9)),
    (19, "37.89", "161.05", None),
    (20, "36", "162", Some(10)),
    (21, "34.29", "162.86", None),
    (22, "32.73", "163.64", Some(11)),
    (23, "31.30", "164.35", None),
    (24, "30", "165", Some(12)),
    (25, "28.8", "165.6", None),
];

fn rotational_table() -> Outcome {
    for (n, a, bc) in ROTATIONAL_ROWS {
        let report = cli(&["hexagon", "--n", &n.to_string()])?;
        check_row(&report, &format!("n={n}"), a, bc)?;
    }
    Ok(())
}

fn hole_table() -> Outcome {
    for (m, a, bc, n) in HOLE_ROWS {
        let report = cli(&["hexagon", "--hole-m", &m.to_string()])?;
        check_row(&report, &format!("m={m}"), a, bc)?;
        if let Some(n) = n {
            let twin = cli(&["hexagon", "--n", &n.to_string()])?;
            ensure!(
                report["angles"] == twin["angles"],
                "m={m}: exact angles differ from n={n}"
            );
            ensure!(
                hexagon_for_hole(m).unwrap() == hexagon_for_n(n, None).unwrap(),
                "m={m}: spec differs from n={n}"
            );
        } else {
            ensure!(m % 2 == 1, "m={m}: even row without a rotational twin");
        }
    }
    Ok(())
}

fn c2_prototype(n: i64) -> HexagonSpec {
    let a = AngleDeg::full_over(n);
    make_hexagon(a, AngleDeg::STRAIGHT - a / 2 - deg(10)).unwrap()
}

fn construction_validity() -> Outcome {
    for n in 3..=8i64 {
        for (label, hex) in [
            ("D2", hexagon_for_n(n, None).unwrap()),
            ("C2", c2_prototype(n)),
        ] {
            for depth in 1..=3 {
                let p =
                    build_rotational_tiling(&hex, n as u32, depth).map_err(|e| e.to_string())?;
                let r = validate_patch(&p).map_err(|e| e.to_string())?;
                let tag = format!("{label} n={n} depth={depth}");
                ensure!(
                    r.passed,
                    "{tag}: {} overlaps, {} bad vertices",
                    r.overlap_pairs.len(),
                    r.bad_vertices.len()
                );
                ensure!(
                    r.edge_contact == EdgeContact::EdgeToEdge,
                    "{tag}: not edge-to-edge"
                );
                ensure!(r.interior_vertices > 0, "{tag}: no interior vertices");
                ensure!(
                    r.exact_interior_vertices == r.interior_vertices,
                    "{tag}: {} of {} interior sums exact",
                    r.exact_interior_vertices,
                    r.interior_vertices
                );
            }
        }
    }
    Ok(())
}

fn group(p: &Patch) -> Result<(SymmetryKind, u32), String> {
    detect_symmetry(p)
        .map(|s| (s.kind, s.order))
        .map_err(|e| e.to_string())
}

fn symmetry_dichotomy() -> Outcome {
    for n in 3..=8i64 {
        for depth in 2..=3 {
            let d2 =
                build_rotational_tiling(&hexagon_for_n(n, None).unwrap(), n as u32, depth).unwrap();
            let want = if n == 3 {
                (SymmetryKind::D, 6)
            } else {
                (SymmetryKind::D, n as u32)
            };
            let got = group(&d2)?;
            ensure!(got == want, "D2 n={n} depth={depth}: got {got:?}");
            let c2 = build_rotational_tiling(&c2_prototype(n), n as u32, depth).unwrap();
            let got = group(&c2)?;
            ensure!(
                got == (SymmetryKind::C, n as u32),
                "C2 n={n} depth={depth}: got {got:?}"
            );
        }
    }
    Ok(())
}

fn bisection_symmetry() -> Outcome {
    let base = build_rotational_tiling(&hexagon_for_n(5, None).unwrap(), 5, 2).unwrap();
    let cut =
        |case, t| bisect_patch(&base, &BisectionSpec::new(case, t).unwrap(), &mut NoFlips).unwrap();
    use BisectCase::*;
    let cases = [
        (I, 0.5, SymmetryKind::D),
        (I, 0.3, SymmetryKind::C),
        (I, 0.8, SymmetryKind::C),
        (II, 0.3, SymmetryKind::C),
        (II, 0.5, SymmetryKind::C),
        (III, 0.3, SymmetryKind::C),
        (III, 0.7, SymmetryKind::C),
    ];
    for (case, t, kind) in cases {
        let p = cut(case, t);
        let r = validate_patch(&p).map_err(|e| e.to_string())?;
        ensure!(r.passed, "{case}:{t} invalid");
        let got = group(&p)?;
        ensure!(got == (kind, 5), "{case}:{t}: got {got:?}");
    }
    // vertex-to-vertex cuts: III runs along a mirror of the outline, I and II do not
    for (case, kind) in [
        (III, SymmetryKind::D),
        (I, SymmetryKind::C),
        (II, SymmetryKind::C),
    ] {
        let p = cut(case, 0.0);
        ensure!(
            p.tiles
                .iter()
                .all(|t| matches!(t.proto, TileProto::QuadLeft | TileProto::QuadRight)),
            "{case}:0 not quadrangles"
        );
        let r = validate_patch(&p).map_err(|e| e.to_string())?;
        ensure!(r.passed, "{case}:0 invalid");
        ensure!(
            r.edge_contact == EdgeContact::EdgeToEdge,
            "{case}:0 not edge-to-edge"
        );
        let got = group(&p)?;
        ensure!(got == (kind, 5), "{case}:0: got {got:?}");
    }
    Ok(())
}

fn hole_geometry() -> Outcome {
    let pentagons = BisectionSpec::new(BisectCase::II, 0.3).unwrap();
    for m in [5u32, 6, 7, 8, 9, 10, 12, 14, 16] {
        let hex = hexagon_for_hole(m as i64).unwrap();
        let p = build_hole_tiling(&hex, m, 2).map_err(|e| e.to_string())?;
        ensure!(validate_patch(&p).unwrap().passed, "m={m}: patch invalid");
        let hole = extract_hole(&p).map_err(|e| format!("m={m}: {e}"))?;
        let b = &hole.boundary;
        ensure!(b.len() == m as usize, "m={m}: hole has {} corners", b.len());
        for l in b.edge_lengths() {
            ensure!((l - 1.0).abs() <= 1e-9, "m={m}: edge length {l}");
        }
        let want = 180.0 - 360.0 / m as f64;
        for a in b.angles() {
            ensure!(
                (a.to_f64() - want).abs() <= 1e-7,
                "m={m}: hole angle {}",
                a.to_f64()
            );
        }
        ensure!(hole.regular, "m={m}: hole not flagged regular");
        let pent = bisect_patch(&p, &pentagons, &mut NoFlips).unwrap();
        ensure!(
            validate_patch(&pent).unwrap().passed,
            "m={m}: pentagon patch invalid"
        );
        let got = group(&pent)?;
        ensure!(got == (SymmetryKind::C, m), "m={m}: pentagon patch {got:?}");
        if m != 6 {
            let got = group(&p)?;
            ensure!(got == (SymmetryKind::C, m), "m={m}: hexagon patch {got:?}");
        }
    }
    Ok(())
}

fn equilateral_holes() -> Outcome {
    let cases = [
        (make_hexagon(deg(72), deg(134)).unwrap(), 10u32, 5u32),
        (
            make_hexagon(AngleDeg::full_over(7), AngleDeg::new(1005, 7).unwrap()).unwrap(),
            14,
            7,
        ),
    ];
    for (hex, m, k) in cases {
        let p = build_hole_tiling(&hex, m, 2).map_err(|e| e.to_string())?;
        ensure!(validate_patch(&p).unwrap().passed, "m={m}: patch invalid");
        let hole = extract_hole(&p).map_err(|e| format!("m={m}: {e}"))?;
        ensure!(
            hole.boundary.len() == m as usize,
            "m={m}: hole has {} corners",
            hole.boundary.len()
        );
        ensure!(
            hole.equilateral && !hole.regular,
            "m={m}: hole not equilateral non-regular"
        );
        let sym = (hole.symmetry.kind, hole.symmetry.order);
        ensure!(sym == (SymmetryKind::D, k), "m={m}: hole symmetry {sym:?}");
        if m == 10 {
            let got = group(&p)?;
            ensure!(got == (SymmetryKind::C, 5), "m=10: patch {got:?}");
        }
        let ab = AngleValue::Exact(hex.a() + hex.b());
        let af = AngleValue::Exact(hex.a() + hex.angles()[5]);
        let outer = hole.outer_angles();
        let starts_ab = outer[0] == ab;
        for (i, o) in outer.iter().enumerate() {
            let want = if (i % 2 == 0) == starts_ab { ab } else { af };
            ensure!(
                *o == want,
                "m={m}: outer angle {i} is {o:?}, expected {want:?}"
            );
        }
    }
    Ok(())
}

fn parity_obstruction() -> Outcome {
    let hex = make_hexagon(deg(80), deg(120)).unwrap();
    ensure!(
        hex.classify() == SymmetryClass::C2,
        "(80,120,160) is not C2"
    );
    match build_hole_tiling(&hex, 9, 2) {
        Err(TileError::Parity(9)) => Ok(()),
        other => Err(format!(
            "expected a parity error, got {:?}",
            other.map(|p| p.len())
        )),
    }
}

fn dual_order() -> Outcome {
    for (a, orders, holes) in [(90, [4u32, 3], [8u32, 6]), (72, [5, 3], [10, 6])] {
        let hex = make_hexagon(deg(a), deg(120)).unwrap();
        ensure!(
            hex.rotation_orders() == orders.to_vec(),
            "A={a}: orders {:?}",
            hex.rotation_orders()
        );
        for n in orders {
            let p = build_rotational_tiling(&hex, n, 2).map_err(|e| format!("A={a} n={n}: {e}"))?;
            ensure!(validate_patch(&p).unwrap().passed, "A={a} n={n}: invalid");
        }
        for m in holes {
            let p = build_hole_tiling(&hex, m, 2).map_err(|e| format!("A={a} m={m}: {e}"))?;
            ensure!(validate_patch(&p).unwrap().passed, "A={a} m={m}: invalid");
            let hole = extract_hole(&p).map_err(|e| format!("A={a} m={m}: {e}"))?;
            ensure!(
                hole.boundary.len() == m as usize && hole.equilateral,
                "A={a} m={m}: wrong hole"
            );
        }
    }
    Ok(())
}

fn snap(p: Point) -> (i64, i64) {
    ((p.x * 1e6).round() as i64, (p.y * 1e6).round() as i64)
}

fn random_flips() -> Outcome {
    let base = build_rotational_tiling(&hexagon_for_n(5, None).unwrap(), 5, 2).unwrap();
    let cells = base.realize().unwrap();
    let spec = BisectionSpec::new(BisectCase::II, 0.3).unwrap();
    let mut flipped_any = false;
    for seed in 0..50u64 {
        let p =
            bisect_patch(&base, &spec, &mut SeededFlips::new(seed)).map_err(|e| e.to_string())?;
        let r = validate_patch(&p).unwrap();
        ensure!(r.passed, "seed {seed}: invalid");
        flipped_any |= p.tiles.iter().any(|t| t.placement.reflect);
        let pieces = p.realize().unwrap();
        for (k, cell) in cells.iter().enumerate() {
            let l: BTreeSet<_> = pieces[2 * k].vertices().iter().map(|q| snap(*q)).collect();
            let r: BTreeSet<_> = pieces[2 * k + 1]
                .vertices()
                .iter()
                .map(|q| snap(*q))
                .collect();
            let outline: BTreeSet<_> = l.symmetric_difference(&r).copied().collect();
            let want: BTreeSet<_> = cell.vertices().iter().map(|q| snap(*q)).collect();
            ensure!(outline == want, "seed {seed}: cell {k} outline changed");
        }
    }
    ensure!(flipped_any, "no seed flipped a cell");
    Ok(())
}

fn bisection_properties() -> Outcome {
    for n in 3..=12 {
        let hex = hexagon_for_n(n, None).unwrap();
        let mirror = hex
            .outline_mirror()
            .ok_or(format!("n={n}: no outline mirror"))?;
        let half_turn = Isometry::rotation_about(hex.center(), AngleDeg::STRAIGHT);
        for step in 1..=19 {
            let t = step as f64 * 0.05;
            for case in BisectCase::ALL {
                let pair = bisect(&hex, &BisectionSpec::new(case, t).unwrap()).unwrap();
                ensure!(
                    half_turn
                        .apply_polygon(&pair.left)
                        .same_outline(&pair.right, 1e-6),
                    "n={n} {case}:{t}: halves not congruent"
                );
            }
            let two = bisect(&hex, &BisectionSpec::new(BisectCase::II, t).unwrap()).unwrap();
            let three =
                bisect(&hex, &BisectionSpec::new(BisectCase::III, 1.0 - t).unwrap()).unwrap();
            for piece in [&two.left, &two.right] {
                let img = mirror.apply_polygon(piece);
                ensure!(
                    img.same_outline(&three.left, 1e-6) || img.same_outline(&three.right, 1e-6),
                    "n={n} t={t}: case II not mirrored onto case III"
                );
            }
        }
    }
    // every convex hexagon with whole-degree angles on a coarse grid
    for a in (5..180).step_by(7) {
        for b in (5..180).step_by(11) {
            let c = 360 - a - b;
            if c <= 0 || c >= 180 {
                continue;
            }
            let hex = make_hexagon(deg(a), deg(b)).unwrap();
            for case in BisectCase::ALL {
                for t in [0.05, 0.25, 0.5, 0.75, 0.95] {
                    let pair = bisect(&hex, &BisectionSpec::new(case, t).unwrap()).unwrap();
                    for piece in [&pair.left, &pair.right] {
                        ensure!(
                            is_type1_pentagon(piece).unwrap(),
                            "({a},{b},{c}) {case}:{t}: not type 1"
                        );
                    }
                }
            }
        }
    }
    Ok(())
}

fn main() {
    let criteria: [(&str, Check); 11] = [
        (
            "rotational prototype angle table, n = 3..18",
            rotational_table,
        ),
        ("hole prototype angle table, m = 5..25", hole_table),
        (
            "rotational patches valid, edge-to-edge, exact vertex sums",
            construction_validity,
        ),
        ("D_n / C_n dichotomy of hexagon patches", symmetry_dichotomy),
        (
            "pentagon and quadrangle bisection symmetry",
            bisection_symmetry,
        ),
        ("regular hole geometry and patch symmetry", hole_geometry),
        ("equilateral hole mode", equilateral_holes),
        (
            "odd hole with a C2 prototype is refused",
            parity_obstruction,
        ),
        ("dual-order hexagons", dual_order),
        ("seeded random flips", random_flips),
        ("bisection property sweep", bisection_properties),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("PASS criterion {}: {name} ({secs:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}

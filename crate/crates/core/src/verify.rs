//! Reproduction checks run by `leadterms verify`.
//!
//! Each check compares a computation with printed reference data and
//! reports pass or fail with a one-line explanation.

use std::time::Instant;

use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::characters::{chi5, specialization_data, DominantWeight};
use crate::conditions::{a11_level2, count_series, length7_candidates, ConditionSet};
use crate::cyclotomic::{omega_antisym, omega_pow, CycNum};
use crate::echelon::{
    leading_terms, row_reduce, scan_cell, verify_certificate, RelationMatrix, ScaledDescriptor,
};
use crate::partition::Partition;
use crate::qseries::{psi_coefficients, psi_identity_holds};
use crate::vertexrel::{
    bracket_aa, bracket_ax, bracket_xx, generate_relation, DescriptorOptions, KBasis, KElement,
    RelationDescriptor,
};

#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub id: u32,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub millis: u128,
}

/// The eight degree 14 relations with their scalings.
pub const TABLE1_ROWS: [&str; 8] = [
    "(1/3)*R(-11)X(-3)",
    "R(-12)X(-2)",
    "S(-11)X(-3)",
    "S(-12)X(-2)",
    "(1/3)*R(-8)X(-6)",
    "R(-9)X(-5)",
    "X(-6)S(-8)",
    "X(-5)S(-9)",
];

pub const TABLE_COLUMNS: [&str; 7] = ["4433", "4442", "5333", "5432", "5522", "6332", "6422"];

pub const TABLE1: [[&str; 7]; 8] = [
    ["1", "0", "1", "2", "0", "2", "0"],
    ["0", "1", "0", "6", "3", "3", "6"],
    ["-4", "-6*w", "-3", "-2-24*w", "6-6*w", "-8", "0"],
    ["0", "-1+2*w", "0", "-4+8*w", "-1+2*w", "0", "0"],
    ["0", "0", "0", "0", "0", "1", "1"],
    ["0", "0", "1", "6", "3", "0", "0"],
    ["0", "0", "0", "0", "0", "1-2*w", "1-2*w"],
    ["0", "0", "-2", "-8", "-1", "-18+6*w", "-12+6*w"],
];

pub const TABLE2: [[&str; 7]; 8] = [
    ["1", "0", "0", "0", "0", "0", "4"],
    ["0", "1", "0", "0", "0", "0", "-6"],
    ["0", "0", "1", "0", "0", "0", "-9"],
    ["0", "0", "0", "1", "0", "0", "3/2"],
    ["0", "0", "0", "0", "1", "0", "0"],
    ["0", "0", "0", "0", "0", "1", "1"],
    ["0", "0", "0", "0", "0", "0", "0"],
    ["0", "0", "0", "0", "0", "0", "0"],
];

/// `χ(q)` through `q^50`.
pub const CHI5_PRINTED: [u64; 51] = [
    1, 0, 1, 1, 2, 2, 3, 3, 5, 5, 7, 8, 11, 12, 16, 18, 23, 26, 33, 37, 46, 52, 63, 72, 87, 98,
    117, 133, 157, 178, 209, 236, 276, 312, 361, 408, 471, 530, 609, 686, 784, 881, 1004, 1126,
    1279, 1433, 1621, 1814, 2048, 2286, 2574,
];

/// `(condition id, k = 0 instance)` for the length four conditions.
pub const LENGTH4_TARGETS: [(u32, [u32; 4]); 12] = [
    (11, [4, 4, 2, 2]),
    (12, [5, 4, 2, 2]),
    (13, [5, 5, 2, 2]),
    (14, [10, 10, 8, 7]),
    (15, [7, 6, 5, 3]),
    (16, [7, 6, 4, 3]),
    (17, [6, 5, 2, 2]),
    (18, [8, 8, 5, 4]),
    (19, [8, 8, 5, 3]),
    (20, [9, 7, 6, 5]),
    (21, [10, 8, 8, 5]),
    (22, [7, 4, 4, 2]),
];

pub const LENGTH5_TARGETS: [(u32, [u32; 5]); 2] = [(23, [7, 6, 4, 2, 2]), (25, [9, 9, 5, 5, 2])];

fn cyc(s: &str) -> CycNum {
    s.parse().expect("reference entry parses")
}

fn part(s: &str) -> Partition {
    s.parse().expect("reference partition parses")
}

fn table(rows: &[[&str; 7]]) -> Vec<Vec<CycNum>> {
    rows.iter().map(|r| r.iter().map(|s| cyc(s)).collect()).collect()
}

/// Matrix of the eight reference relations over the reference columns.
pub fn table1_matrix() -> Result<RelationMatrix, crate::Error> {
    let ds: Vec<ScaledDescriptor> = TABLE1_ROWS
        .iter()
        .map(|l| ScaledDescriptor::parse_label(l))
        .collect::<Result<_, _>>()?;
    RelationMatrix::from_descriptors(14, 4, 6, &ds)
}

fn outcome(id: u32, name: &'static str, start: Instant, res: Result<(), String>) -> CheckOutcome {
    CheckOutcome {
        id,
        name,
        passed: res.is_ok(),
        detail: res.err().unwrap_or_else(|| "ok".into()),
        millis: start.elapsed().as_millis(),
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

pub fn check_psi() -> Result<(), String> {
    let a = psi_coefficients(2);
    let want: Vec<CycNum> = [1, -6, 18].iter().map(|&x| CycNum::from(x)).collect();
    let got: Vec<CycNum> = a.into_iter().map(CycNum::from_rational).collect();
    ensure(got == want, || format!("psi coefficients {got:?}"))?;
    ensure(psi_identity_holds(40), || "defining identity fails below order 40".into())
}

fn check_relation(desc: &str, want: &[(&str, &str)]) -> Result<(), String> {
    let d: RelationDescriptor = desc.parse().map_err(|e| format!("{e}"))?;
    let rel = generate_relation(&d, 6, d.required_psi_order(6)).map_err(|e| e.to_string())?;
    for (k, v) in want {
        let got = rel.coeff(&part(k));
        ensure(got == cyc(v), || format!("{desc} at {k}: {got}, expected {v}"))?;
    }
    Ok(())
}

pub fn check_relations() -> Result<(), String> {
    check_relation(
        "R(-12)X(-2)",
        &[("4442", "1"), ("5432", "6"), ("5522", "3"), ("6332", "3"), ("6422", "6")],
    )?;
    check_relation(
        "S(-11)X(-3)",
        &[
            ("4433", "-4"),
            ("4442", "-6*w"),
            ("5333", "-3"),
            ("5432", "-2-24*w"),
            ("5522", "6-6*w"),
            ("6332", "-8"),
        ],
    )?;
    check_relation("X(-6)S(-8)", &[("6332", "1-2*w"), ("6422", "1-2*w")])?;
    let m = table1_matrix().map_err(|e| e.to_string())?;
    let cols: Vec<String> = m.columns.iter().map(Partition::to_string).collect();
    ensure(cols == TABLE_COLUMNS, || format!("columns {cols:?}"))?;
    let want = table(&TABLE1);
    for (i, (row, w)) in m.rows.iter().zip(&want).enumerate() {
        ensure(&row.coeffs == w, || format!("table row {} differs", i + 1))?;
    }
    Ok(())
}

pub fn check_reduction(conditions: &ConditionSet) -> Result<(), String> {
    let m = table1_matrix().map_err(|e| e.to_string())?;
    let red = row_reduce(&m);
    let want = table(&TABLE2);
    for (i, (row, w)) in red.rows.iter().zip(&want).enumerate() {
        ensure(&row.coeffs == w, || format!("reduced row {} differs", i + 1))?;
    }
    let rep = leading_terms(&m, 6, conditions);
    ensure(rep.new_pivots == vec![part("5522")], || {
        format!("new pivots {:?}", rep.new_pivots)
    })
}

fn check_scan_target(id: u32, parts: &[u32], conditions: &ConditionSet) -> Result<(), String> {
    let target = Partition::new(parts.to_vec()).map_err(|e| e.to_string())?;
    let degree = target.weight() as u32;
    let max_part = target.largest().unwrap_or(2);
    let rep = scan_cell(degree, target.len(), max_part, None, &DescriptorOptions::default(), conditions)
        .map_err(|e| e.to_string())?;
    let cert = rep
        .certificate(&target)
        .ok_or_else(|| format!("condition {id}: {target} is not a pivot at degree {degree}"))?;
    let ok = verify_certificate(cert, max_part).map_err(|e| e.to_string())?;
    ensure(ok, || format!("condition {id}: certificate for {target} does not check"))
}

pub fn check_length4(conditions: &ConditionSet) -> Result<(), String> {
    LENGTH4_TARGETS
        .iter()
        .try_for_each(|(id, p)| check_scan_target(*id, p, conditions))
}

pub fn check_length5(conditions: &ConditionSet) -> Result<(), String> {
    LENGTH5_TARGETS
        .iter()
        .try_for_each(|(id, p)| check_scan_target(*id, p, conditions))
}

pub fn check_characters() -> Result<(), String> {
    let sym = |r: &[u32]| {
        let mut v: Vec<u32> = r.iter().flat_map(|&x| [x, 16 - x]).collect();
        v.sort_unstable();
        v
    };
    let expected = [
        (DominantWeight::new(5, 0), sym(&[2, 3, 4, 5])),
        (DominantWeight::new(3, 1), sym(&[1, 3, 5, 7])),
        (DominantWeight::new(1, 2), sym(&[1, 4, 6, 7])),
    ];
    for (w, j) in expected {
        let d = specialization_data(w);
        ensure(d.modulus == 16 && d.j_residues == j && d.k_residues.is_empty(), || {
            format!("residues for ({}, {}): {:?}", w.m0, w.m1, d.j_residues)
        })?;
    }
    let chi = chi5(50);
    for (n, &c) in CHI5_PRINTED.iter().enumerate() {
        let got = chi.coeff(n).to_u64();
        ensure(got == Some(c), || format!("chi5 coefficient {n}: {got:?}, expected {c}"))?;
    }
    Ok(())
}

pub fn check_gseries(conditions: &ConditionSet) -> Result<(), String> {
    let g = count_series(conditions, 48);
    let chi = chi5(48);
    for n in 0..=48 {
        let delta = g.coeff(n) - chi.coeff(n);
        let want = if n == 42 || n == 48 { 1 } else { 0 };
        ensure(delta == want.into(), || format!("delta at {n} is {delta}, expected {want}"))?;
    }
    Ok(())
}

pub fn check_length7(conditions: &ConditionSet) -> Result<(), String> {
    let c = length7_candidates(42, conditions);
    ensure(c == vec![part("10,10,8,6,4,2,2")], || format!("candidates {c:?}"))
}

pub fn check_borcea() -> Result<(), String> {
    let g = count_series(&a11_level2(), 50);
    let chi = chi5(50);
    for n in 0..=50 {
        ensure(g.coeff(n) == chi.coeff(n), || {
            format!("count {} vs chi {} at {n}", g.coeff(n), chi.coeff(n))
        })?;
    }
    Ok(())
}

/// Small exhaustive versions of the property suites: field laws on a grid
/// of elements, the omega tables, and the Jacobi identity.
pub fn check_properties() -> Result<(), String> {
    let mut grid = Vec::new();
    for a in -2..=2 {
        for b in -2..=2 {
            for d in [1, 2, 3] {
                grid.push(CycNum::new(
                    num_rational::BigRational::new(a.into(), d.into()),
                    num_rational::BigRational::new(b.into(), 1.into()),
                ));
            }
        }
    }
    let sample: Vec<&CycNum> = grid.iter().step_by(3).collect();
    for x in &sample {
        for y in &sample {
            ensure(*x * *y == *y * *x, || format!("{x}*{y} not commutative"))?;
            for z in &sample {
                ensure((*x * *y) * *z == *x * (*y * *z), || "product not associative".into())?;
                ensure(*x * &(*y + *z) == *x * *y + *x * *z, || "not distributive".into())?;
            }
        }
        if !x.is_zero() {
            let inv = x.inv().map_err(|e| e.to_string())?;
            ensure((*x * &inv) == CycNum::from(1), || format!("inverse of {x}"))?;
        }
    }
    for i in -40..=40 {
        for j in -40..=40 {
            ensure(omega_pow(i) * omega_pow(j) == omega_pow(i + j), || "omega powers".into())?;
        }
        ensure(omega_antisym(-i) == -omega_antisym(i), || format!("antisym at {i}"))?;
        ensure(omega_pow(i) - omega_pow(-i) == omega_antisym(i), || format!("antisym at {i}"))?;
    }
    let mut basis = vec![KBasis::C];
    for i in -12..=12 {
        basis.push(KBasis::X(i));
        if crate::vertexrel::is_heisenberg_index(i) {
            basis.push(KBasis::Alpha(i));
        }
    }
    for &a in &basis {
        for &b in &basis {
            for &c in &basis {
                let (ea, eb, ec) = (KElement::basis(a), KElement::basis(b), KElement::basis(c));
                let mut sum = ea.bracket(&eb.bracket(&ec));
                sum.add(&eb.bracket(&ec.bracket(&ea)));
                sum.add(&ec.bracket(&ea.bracket(&eb)));
                ensure(sum.is_zero(), || format!("Jacobi fails at {a:?} {b:?} {c:?}"))?;
            }
        }
    }
    // spot values of the brackets themselves
    let xx = bracket_xx(1, -1);
    ensure(!xx.c.is_zero(), || "central term of [X(1), X(-1)] vanished".into())?;
    ensure(bracket_ax(1, 3).is_ok() && bracket_ax(2, 3).is_err(), || "alpha index checks".into())?;
    ensure(bracket_aa(1, -1).is_ok(), || "[alpha(1), alpha(-1)]".into())
}

/// Runs every check. A custom `conditions` set replaces the builtin
/// `a22-level5` in the checks that use it.
pub fn run_all(conditions: &ConditionSet) -> Vec<CheckOutcome> {
    let mut out = Vec::new();
    macro_rules! run {
        ($id:expr, $name:expr, $e:expr) => {{
            let start = Instant::now();
            out.push(outcome($id, $name, start, $e));
        }};
    }
    run!(1, "psi coefficients", check_psi());
    run!(2, "relation golden data", check_relations());
    run!(3, "row reduction", check_reduction(conditions));
    run!(4, "length 4 scan", check_length4(conditions));
    run!(5, "length 5 spot checks", check_length5(conditions));
    run!(6, "character data", check_characters());
    run!(7, "generating series", check_gseries(conditions));
    run!(8, "length 7 uniqueness", check_length7(conditions));
    run!(9, "Borcea duality", check_borcea());
    run!(10, "property suites", check_properties());
    out
}

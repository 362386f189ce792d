//! Explicit matrix models of Iwahori-Hecke algebra representations over the
//! rational function field in q, one model per irreducible character.
//!
//! Type A and type B models are seminormal: basis vectors are standard
//! (bi)tableaux and each generator acts on at most two of them at a time.
//! The rank-two types use upper/lower triangular two-by-two models whose
//! braid relation pins down the one free product parameter. Every model is
//! verified at build time: quadratic relations, braid relations, and traces
//! at q = 1 matching the group character table row by row.

use crate::coxeter::{TypeFamily, WeylGroup};
use crate::error::{Error, Result};
use crate::exactalg::{rat, BigRat, QMatrix, QPoly, RatFun};
use crate::wchars::CharTable;
use num_traits::Zero;
use std::collections::HashMap;

/// A matrix model paired with its row in the group character table.
pub struct HeckeModel {
    pub name: String,
    pub w_irrep: usize,
    pub dim: usize,
    /// One matrix per simple reflection, in generator order.
    pub gens: Vec<QMatrix>,
}

/// All models of one algebra plus the character values on the standard
/// basis elements indexed by minimal class representatives.
pub struct HeckeAlgebra {
    pub models: Vec<HeckeModel>,
    /// char_values[irrep][class], integer polynomials in q.
    pub char_values: Vec<Vec<QPoly>>,
}

pub(crate) fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=n.min(max)).rev() {
            cur.push(part);
            rec(n - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

fn digits(p: &[usize]) -> String {
    p.iter().map(|x| x.to_string()).collect()
}

pub(crate) fn partition_name(p: &[usize]) -> String {
    format!("[{}]", digits(p))
}

fn bipartition_name(a: &[usize], b: &[usize]) -> String {
    format!("[{}|{}]", digits(a), digits(b))
}

/// Box coordinates per letter: (side, row, col), side 0 or 1.
type Tableau = Vec<(usize, usize, usize)>;

/// Standard fillings of a pair of shapes (single shapes pass an empty
/// second component). Letters are placed in increasing order; a box is
/// available if its row above is strictly longer so far.
fn standard_tableaux(shapes: [&[usize]; 2]) -> Vec<Tableau> {
    let n: usize = shapes.iter().map(|s| s.iter().sum::<usize>()).sum();
    let mut fill = [vec![0usize; shapes[0].len()], vec![0usize; shapes[1].len()]];
    let mut cur: Tableau = Vec::with_capacity(n);
    let mut out = Vec::new();
    fn rec(
        n: usize,
        shapes: [&[usize]; 2],
        fill: &mut [Vec<usize>; 2],
        cur: &mut Tableau,
        out: &mut Vec<Tableau>,
    ) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for side in 0..2 {
            for row in 0..shapes[side].len() {
                let col = fill[side][row];
                if col >= shapes[side][row] {
                    continue;
                }
                if row > 0 && fill[side][row - 1] <= col {
                    continue;
                }
                fill[side][row] += 1;
                cur.push((side, row, col));
                rec(n, shapes, fill, cur, out);
                cur.pop();
                fill[side][row] -= 1;
            }
        }
    }
    rec(n, shapes, &mut fill, &mut cur, &mut out);
    out
}

/// (q - 1) / (1 - sign * q^exp) as a reduced rational function, written
/// with nonnegative powers by clearing q^{-exp} when exp is negative.
fn seminormal_diagonal(sign: i64, exp: i64) -> Result<RatFun> {
    let qm1 = QPoly::from_ints(&[-1, 1]);
    let (num, den) = if exp >= 0 {
        let mut d = QPoly::monomial(rat(-sign), exp as usize);
        d = &d + &QPoly::one();
        (qm1, d)
    } else {
        let e = (-exp) as usize;
        let num = &qm1 * &QPoly::monomial(rat(1), e);
        let den = &QPoly::monomial(rat(1), e) - &QPoly::constant(rat(sign));
        (num, den)
    };
    RatFun::new(num, den)
}

/// Fills the two-by-two seminormal block for a swap pair. `x` is the ratio
/// of diagonal weights as (sign, exponent).
fn place_pair(m: &mut QMatrix, t: usize, t2: usize, sign: i64, exp: i64) -> Result<()> {
    let a = seminormal_diagonal(sign, exp)?;
    let b = &a + &RatFun::one();
    m[(t, t)] = a;
    m[(t2, t)] = b;
    Ok(())
}

/// Seminormal model for one shape: matrices for Coxeter generators in the
/// group's own numbering. Type A rank r uses partitions of r + 1. Type B
/// rank n uses bipartitions (alpha|beta) of n; the reversal that matches
/// the chain of letter transpositions to the group's simple reflections
/// sends generator j (1-indexed) to the letter pair (n - j, n - j + 1) and
/// the last generator to the extra reflection fixing letter 1.
fn seminormal_model(w: &WeylGroup, shapes: [&[usize]; 2]) -> Result<Vec<QMatrix>> {
    let tabs = standard_tableaux(shapes);
    let dim = tabs.len();
    let index: HashMap<&Tableau, usize> = tabs.iter().zip(0..).collect();
    let n: usize = shapes.iter().map(|s| s.iter().sum::<usize>()).sum();
    let type_b = matches!(w.ctype.family, TypeFamily::B);
    let mut gens = Vec::with_capacity(w.rank);
    for g in 0..w.rank {
        let mut m = QMatrix::zero(dim, dim);
        if type_b && g == w.rank - 1 {
            for (t, tab) in tabs.iter().enumerate() {
                let v = if tab[0].0 == 0 { RatFun::q() } else { -&RatFun::one() };
                m[(t, t)] = v;
            }
            gens.push(m);
            continue;
        }
        // 1-indexed letters (i, i+1) acted on by this generator.
        let i = if type_b { n - 1 - g } else { g + 1 };
        for (t, tab) in tabs.iter().enumerate() {
            let (s1, r1, c1) = tab[i - 1];
            let (s2, r2, c2) = tab[i];
            if s1 == s2 && r1 == r2 {
                m[(t, t)] = RatFun::q();
                continue;
            }
            if s1 == s2 && c1 == c2 {
                m[(t, t)] = -&RatFun::one();
                continue;
            }
            let mut swapped = tab.clone();
            swapped.swap(i - 1, i);
            let t2 = *index
                .get(&swapped)
                .ok_or_else(|| Error::Invariant("swapped tableau is not standard".into()))?;
            // Ratio of diagonal weights for letters i and i+1.
            let (con1, con2) = (c1 as i64 - r1 as i64, c2 as i64 - r2 as i64);
            let (sign, exp) = if !type_b || s1 == s2 {
                (1, con1 - con2)
            } else if s1 == 0 {
                (-1, con1 + 1 - con2)
            } else {
                (-1, con1 - con2 - 1)
            };
            place_pair(&mut m, t, t2, sign, exp)?;
        }
        gens.push(m);
    }
    Ok(gens)
}

/// Triangular two-by-two models for the rank-two types: the product
/// parameter is forced by the braid relation of order m.
fn dihedral_two_dims(m: usize) -> Vec<Vec<QMatrix>> {
    let products: Vec<QPoly> = match m {
        4 => vec![QPoly::from_ints(&[0, 2])],
        6 => vec![QPoly::from_ints(&[0, 3]), QPoly::from_ints(&[0, 1])],
        _ => unreachable!("only orders 4 and 6 arise"),
    };
    products
        .into_iter()
        .map(|ab| {
            let mut t1 = QMatrix::zero(2, 2);
            t1[(0, 0)] = -&RatFun::one();
            t1[(0, 1)] = RatFun::one();
            t1[(1, 1)] = RatFun::q();
            let mut t2 = QMatrix::zero(2, 2);
            t2[(0, 0)] = RatFun::q();
            t2[(1, 0)] = RatFun::from_poly(ab);
            t2[(1, 1)] = -&RatFun::one();
            vec![t1, t2]
        })
        .collect()
}

fn one_dim(vals: [i64; 2]) -> Vec<QMatrix> {
    vals.iter()
        .map(|&v| {
            let mut m = QMatrix::zero(1, 1);
            m[(0, 0)] = if v == 1 { RatFun::q() } else { -&RatFun::one() };
            m
        })
        .collect()
}

/// All raw models for the type, before pairing with character rows.
fn raw_models(w: &WeylGroup) -> Result<Vec<Vec<QMatrix>>> {
    match (w.ctype.family, w.rank) {
        (TypeFamily::A, r) => partitions(r + 1)
            .iter()
            .map(|p| seminormal_model(w, [p, &[]]))
            .collect(),
        (TypeFamily::B, 2) | (TypeFamily::G, 2) => {
            let m = if matches!(w.ctype.family, TypeFamily::B) { 4 } else { 6 };
            let mut out: Vec<Vec<QMatrix>> =
                [[1, 1], [-1, -1], [1, -1], [-1, 1]].iter().map(|&v| one_dim(v)).collect();
            out.extend(dihedral_two_dims(m));
            Ok(out)
        }
        (TypeFamily::B, n) => {
            let mut out = Vec::new();
            for asize in (0..=n).rev() {
                for alpha in partitions(asize) {
                    for beta in partitions(n - asize) {
                        out.push(seminormal_model(w, [&alpha, &beta])?);
                    }
                }
            }
            Ok(out)
        }
        _ => Err(Error::Unsupported(format!(
            "no representation models for type {}",
            w.ctype.name()
        ))),
    }
}

fn rational_matrix_at_one(m: &QMatrix) -> Result<Vec<Vec<BigRat>>> {
    let one = rat(1);
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m[(i, j)].eval(&one)).collect())
        .collect()
}

fn rational_product_trace(gens: &[Vec<Vec<BigRat>>], word: &[u8], dim: usize) -> BigRat {
    let mut acc: Vec<Vec<BigRat>> = (0..dim)
        .map(|i| (0..dim).map(|j| if i == j { rat(1) } else { rat(0) }).collect())
        .collect();
    for &s in word {
        let g = &gens[s as usize];
        let mut next = vec![vec![rat(0); dim]; dim];
        for (i, row) in acc.iter().enumerate() {
            for (k, aik) in row.iter().enumerate() {
                if aik.is_zero() {
                    continue;
                }
                for j in 0..dim {
                    next[i][j] += aik * &g[k][j];
                }
            }
        }
        acc = next;
    }
    (0..dim).map(|i| acc[i][i].clone()).sum()
}

/// Traces of the q = 1 specializations on all classes, labeled by shape.
/// This is the reference used to attach shape names to table rows.
pub(crate) fn seminormal_q1_character_values(w: &WeylGroup) -> Result<Vec<(String, Vec<i64>)>> {
    let shapes: Vec<(String, [Vec<usize>; 2])> = match (w.ctype.family, w.rank) {
        (TypeFamily::A, r) => partitions(r + 1)
            .into_iter()
            .map(|p| (partition_name(&p), [p, Vec::new()]))
            .collect(),
        (TypeFamily::B, n) => {
            let mut out = Vec::new();
            for asize in (0..=n).rev() {
                for alpha in partitions(asize) {
                    for beta in partitions(n - asize) {
                        out.push((bipartition_name(&alpha, &beta), [alpha.clone(), beta]));
                    }
                }
            }
            out
        }
        _ => {
            return Err(Error::Unsupported(format!(
                "no seminormal models for type {}",
                w.ctype.name()
            )))
        }
    };
    let mut out = Vec::with_capacity(shapes.len());
    for (name, [alpha, beta]) in shapes {
        let gens = seminormal_model(w, [&alpha, &beta])?;
        let dim = gens.first().map_or(1, QMatrix::rows);
        let at_one: Vec<Vec<Vec<BigRat>>> = gens
            .iter()
            .map(rational_matrix_at_one)
            .collect::<Result<_>>()?;
        let mut vals = Vec::with_capacity(w.classes.len());
        for cls in &w.classes {
            let tr = rational_product_trace(&at_one, &w.element(cls.rep).word, dim);
            if !tr.is_integer() {
                return Err(Error::Invariant("trace at q = 1 is not an integer".into()));
            }
            vals.push(
                i64::try_from(tr.to_integer())
                    .map_err(|_| Error::Invariant("trace overflow".into()))?,
            );
        }
        out.push((name, vals));
    }
    Ok(out)
}

fn verify_quadratic(t: &QMatrix) -> bool {
    let n = t.rows();
    let sq = t * t;
    let lin = t.scale(&RatFun::from_poly(QPoly::from_ints(&[-1, 1])));
    let cst = QMatrix::identity(n).scale(&RatFun::q());
    sq == &lin + &cst
}

fn alternating_product(a: &QMatrix, b: &QMatrix, m: usize) -> QMatrix {
    let mut acc = QMatrix::identity(a.rows());
    for t in 0..m {
        acc = if t % 2 == 0 { &acc * a } else { &acc * b };
    }
    acc
}

/// Builds every model, checks the defining relations, and pairs models
/// with table rows through their q = 1 traces. The returned models are
/// ordered like the table rows.
pub fn build(w: &WeylGroup, table: &CharTable) -> Result<HeckeAlgebra> {
    let raw = raw_models(w)?;
    let k = table.len();
    if raw.len() != k {
        return Err(Error::Invariant("model count differs from table rows".into()));
    }
    let dim_sq: usize = raw.iter().map(|g| g[0].rows() * g[0].rows()).sum();
    if dim_sq != w.order() {
        return Err(Error::Invariant("model dimensions violate sum of squares".into()));
    }

    for gens in &raw {
        for t in gens {
            if !verify_quadratic(t) {
                return Err(Error::Invariant("generator fails the quadratic relation".into()));
            }
        }
        for i in 0..w.rank {
            for j in i + 1..w.rank {
                let m = w.element_order(w.mult(w.simple_reflection(i), w.simple_reflection(j)));
                let lhs = alternating_product(&gens[i], &gens[j], m);
                let rhs = alternating_product(&gens[j], &gens[i], m);
                if lhs != rhs {
                    return Err(Error::Invariant("generators fail a braid relation".into()));
                }
            }
        }
    }

    // Pair with table rows by traces at q = 1.
    let mut row_of_values: HashMap<&[i64], usize> = HashMap::new();
    for (r, row) in table.values.iter().enumerate() {
        row_of_values.insert(row.as_slice(), r);
    }
    let mut ordered: Vec<Option<HeckeModel>> = (0..k).map(|_| None).collect();
    for gens in raw {
        let dim = gens[0].rows();
        let at_one: Vec<Vec<Vec<BigRat>>> = gens
            .iter()
            .map(rational_matrix_at_one)
            .collect::<Result<_>>()?;
        let mut vals = Vec::with_capacity(w.classes.len());
        for cls in &w.classes {
            let tr = rational_product_trace(&at_one, &w.element(cls.rep).word, dim);
            if !tr.is_integer() {
                return Err(Error::Invariant("trace at q = 1 is not an integer".into()));
            }
            vals.push(
                i64::try_from(tr.to_integer())
                    .map_err(|_| Error::Invariant("trace overflow".into()))?,
            );
        }
        let r = *row_of_values
            .get(vals.as_slice())
            .ok_or_else(|| Error::Invariant("model traces match no table row".into()))?;
        if ordered[r].is_some() {
            return Err(Error::Invariant("two models match one table row".into()));
        }
        ordered[r] = Some(HeckeModel {
            name: table.names[r].clone(),
            w_irrep: r,
            dim,
            gens,
        });
    }
    let models: Vec<HeckeModel> = ordered
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::Invariant("a table row has no model".into()))?;

    // Character values on the standard basis at minimal representatives.
    let mut char_values = Vec::with_capacity(k);
    for model in &models {
        let mut row = Vec::with_capacity(w.classes.len());
        for cls in &w.classes {
            row.push(trace_along_word(model, &w.element(cls.rep).word)?);
        }
        char_values.push(row);
    }

    // The trivial row restricts to the index character and the sign row to
    // the alternating one.
    for (c, cls) in w.classes.iter().enumerate() {
        let expect_index = QPoly::monomial(rat(1), cls.min_length);
        if char_values[table.trivial][c] != expect_index {
            return Err(Error::Invariant("index character has a wrong value".into()));
        }
        let expect_sign = QPoly::constant(rat(if cls.min_length % 2 == 0 { 1 } else { -1 }));
        if char_values[table.sign][c] != expect_sign {
            return Err(Error::Invariant("sign character has a wrong value".into()));
        }
        for r in 0..k {
            if char_values[r][c].eval(&rat(1)) != BigRat::from_integer(table.values[r][c].into()) {
                return Err(Error::Invariant("trace does not specialize to the table".into()));
            }
        }
    }
    Ok(HeckeAlgebra { models, char_values })
}

/// Trace of the product of generator matrices along any word, reduced to a
/// polynomial with integer coefficients.
pub fn trace_along_word(model: &HeckeModel, word: &[u8]) -> Result<QPoly> {
    let mut acc = QMatrix::identity(model.dim);
    for &s in word {
        acc = &acc * &model.gens[s as usize];
    }
    let tr = acc.trace().to_poly()?;
    tr.int_coeffs()?;
    Ok(tr)
}

/// Expansion coefficients of the trace functional on one basis element in
/// terms of the minimal class representatives: memoized rewriting that
/// either recognizes a minimal element or shortens it by a conjugation.
pub struct ClassPolynomials<'a> {
    w: &'a WeylGroup,
    memo: HashMap<usize, Vec<QPoly>>,
}

impl<'a> ClassPolynomials<'a> {
    pub fn new(w: &'a WeylGroup) -> Self {
        ClassPolynomials { w, memo: HashMap::new() }
    }

    pub fn of(&mut self, x: usize) -> Result<Vec<QPoly>> {
        if let Some(v) = self.memo.get(&x) {
            return Ok(v.clone());
        }
        let w = self.w;
        let k = w.classes.len();
        let cls = w.class_of(x);
        if w.classes[cls].min_reps.contains(&x) {
            let mut v = vec![QPoly::zero(); k];
            v[cls] = QPoly::one();
            self.memo.insert(x, v.clone());
            return Ok(v);
        }
        // Walk the length-preserving conjugation component looking for an
        // element that a conjugation strictly shortens in two steps.
        let len = w.length(x);
        let mut component = vec![x];
        let mut seen: Vec<usize> = vec![x];
        let mut found: Option<(usize, usize)> = None;
        let mut head = 0;
        'bfs: while head < component.len() {
            let z = component[head];
            head += 1;
            for s in 0..w.rank {
                let sr = w.simple_reflection(s);
                let sz = w.mult(sr, z);
                let szs = w.right_mult(sz, s);
                if w.length(sz) < len && w.length(szs) < w.length(sz) {
                    found = Some((z, s));
                    break 'bfs;
                }
                if w.length(szs) == len && !seen.contains(&szs) {
                    seen.push(szs);
                    component.push(szs);
                }
            }
        }
        let (z, s) = found.ok_or_else(|| {
            Error::Invariant("no shortening conjugation found for a non-minimal element".into())
        })?;
        let sr = w.simple_reflection(s);
        let sz = w.mult(sr, z);
        let szs = w.right_mult(sz, s);
        let f_short = self.of(sz)?;
        let f_shorter = self.of(szs)?;
        let qm1 = QPoly::from_ints(&[-1, 1]);
        let q = QPoly::q();
        let v: Vec<QPoly> = f_short
            .iter()
            .zip(&f_shorter)
            .map(|(a, b)| &(&qm1 * a) + &(&q * b))
            .collect();
        for member in seen {
            self.memo.insert(member, v.clone());
        }
        Ok(v)
    }
}

/// One-shot convenience wrapper around the memoized calculator.
pub fn class_polynomials(w: &WeylGroup, x: usize) -> Result<Vec<QPoly>> {
    ClassPolynomials::new(w).of(x)
}

/// Checks that direct traces agree across every minimal representative of
/// the class, for every model.
pub fn min_rep_trace_invariance(w: &WeylGroup, alg: &HeckeAlgebra, class_idx: usize) -> Result<()> {
    let cls = &w.classes[class_idx];
    for model in &alg.models {
        let base = &alg.char_values[model.w_irrep][class_idx];
        for &rep in &cls.min_reps {
            let tr = trace_along_word(model, &w.element(rep).word)?;
            if &tr != base {
                return Err(Error::Invariant(format!(
                    "trace differs between minimal representatives of class {}",
                    cls.label
                )));
            }
        }
    }
    Ok(())
}

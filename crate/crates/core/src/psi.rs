//! The central map on conjugacy classes: an exact three-factor matrix
//! product sending each class to an integer-polynomial combination of the
//! irreducible characters, the induced unipotent-class assignment, and the
//! structural checks built on top (degree bound, representative
//! independence, parabolic induction, palindromy).

use std::collections::HashMap;

use num_traits::Zero;

use crate::coxeter::{CartanType, TypeFamily, WeylGroup};
use crate::error::{Error, Result};
use crate::exactalg::{rat, rat_frac, BigRat, QMatrix, QPoly, RatFun};
use crate::families::{self, FamilyDatum};
use crate::hecke::{self, HeckeAlgebra};
use crate::springer::{self, SpringerTable};
use crate::wchars::{self, CharTable};

/// Value on one conjugacy class: one integer polynomial per irreducible
/// character, in character-table row order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsiValue {
    pub class_idx: usize,
    pub coeffs: Vec<QPoly>,
    /// Degree bound `len(w) - (rank - m)`; always even, and attained by
    /// the trivial-character component with coefficient one.
    pub bound: usize,
}

/// Everything needed to evaluate the map for one Cartan type.
pub struct PsiContext {
    pub ctype: CartanType,
    pub group: WeylGroup,
    pub table: CharTable,
    pub algebra: HeckeAlgebra,
    pub families: Vec<FamilyDatum>,
    /// Constant middle factor, block diagonal over the families, rows and
    /// columns in character-table order.
    pub a_prime: Vec<Vec<BigRat>>,
    pub springer: SpringerTable,
    /// Checksums `(file name, sha256)` of the curated data files in use.
    pub checksums: Vec<(String, String)>,
    a_dp: QMatrix,
}

impl PsiContext {
    /// Builds the whole pipeline for a supported type.
    pub fn new(ctype: CartanType) -> Result<PsiContext> {
        if !ctype.is_supported() {
            return Err(Error::Unsupported(ctype.name()));
        }
        let group = WeylGroup::build(ctype)?;
        let table = wchars::char_table(&group)?;
        let algebra = hecke::build(&group, &table)?;
        let (families, family_file) = families::load_families(ctype, &table)?;
        let a_prime = families::a_prime(&table, &families)?;
        let (springer, springer_file) = springer::springer_table(&group, &table)?;
        let mut checksums = vec![(family_file.name.clone(), family_file.checksum.clone())];
        if let Some(f) = &springer_file {
            checksums.push((f.name.clone(), f.checksum.clone()));
        }
        let a_dp = build_third_factor(&group, &table)?;
        Ok(PsiContext {
            ctype,
            group,
            table,
            algebra,
            families,
            a_prime,
            springer,
            checksums,
            a_dp,
        })
    }

    /// Left-factor entry: `(q-1)^m` times the Hecke character value at the
    /// canonical minimal representative.
    pub fn a_entry(&self, class_idx: usize, irrep: usize) -> QPoly {
        let m = self.group.classes[class_idx].m;
        let scale = QPoly::from_ints(&[-1, 1]).pow(m);
        &scale * &self.algebra.char_values[irrep][class_idx]
    }

    /// Left factor as a classes-by-characters matrix of polynomials.
    pub fn a_matrix(&self) -> Vec<Vec<QPoly>> {
        (0..self.group.classes.len())
            .map(|c| (0..self.table.len()).map(|e| self.a_entry(c, e)).collect())
            .collect()
    }

    /// Right factor: the class-averaged character pairing weighted by the
    /// inverse reflection characteristic polynomials.
    pub fn a_doubleprime(&self) -> &QMatrix {
        &self.a_dp
    }

    /// Evaluates the map on a class via its canonical representative.
    pub fn psi_of_class(&self, class_idx: usize) -> Result<PsiValue> {
        let a_row: Vec<QPoly> = (0..self.table.len())
            .map(|e| self.a_entry(class_idx, e))
            .collect();
        self.psi_from_row(class_idx, &a_row)
    }

    /// Evaluates the map using any chosen minimal-length representative;
    /// the result must not depend on the choice.
    pub fn psi_with_rep(&self, class_idx: usize, elem: usize) -> Result<PsiValue> {
        let cls = &self.group.classes[class_idx];
        if self.group.class_of(elem) != class_idx || self.group.length(elem) != cls.min_length {
            return Err(Error::Invariant(format!(
                "element {} is not a minimal representative of {}",
                elem, cls.label
            )));
        }
        let word = &self.group.element(elem).word;
        let scale = QPoly::from_ints(&[-1, 1]).pow(cls.m);
        let mut a_row = Vec::with_capacity(self.table.len());
        for model in &self.algebra.models {
            a_row.push(&scale * &hecke::trace_along_word(model, word)?);
        }
        self.psi_from_row(class_idx, &a_row)
    }

    fn psi_from_row(&self, class_idx: usize, a_row: &[QPoly]) -> Result<PsiValue> {
        let k = self.table.len();
        let cls = &self.group.classes[class_idx];
        let bound = cls.min_length - (self.group.rank - cls.m);
        if bound % 2 != 0 {
            return Err(Error::Invariant(format!(
                "odd degree bound for class {}",
                cls.label
            )));
        }
        let mut mid = vec![QPoly::zero(); k];
        for e1 in 0..k {
            if a_row[e1].is_zero() {
                continue;
            }
            for e2 in 0..k {
                let c = &self.a_prime[e1][e2];
                if !c.is_zero() {
                    let s = &mid[e2] + &a_row[e1].scale(c);
                    mid[e2] = s;
                }
            }
        }
        let mut coeffs = Vec::with_capacity(k);
        for e in 0..k {
            let mut acc = RatFun::zero();
            for e2 in 0..k {
                if !mid[e2].is_zero() {
                    acc = &acc + &(&RatFun::from_poly(mid[e2].clone()) * &self.a_dp[(e2, e)]);
                }
            }
            let what = format!("coefficient of {} in class {}", self.table.names[e], cls.label);
            let poly = acc.to_poly().map_err(|_| Error::NotPolynomial(what.clone()))?;
            poly.int_coeffs().map_err(|_| Error::NonIntegral(what.clone()))?;
            if let Some(d) = poly.degree() {
                if d > bound {
                    return Err(Error::Invariant(format!("degree bound exceeded: {what}")));
                }
            }
            coeffs.push(poly);
        }
        if coeffs[self.table.trivial].coeff(bound) != rat(1) {
            return Err(Error::Invariant(format!(
                "trivial-character top coefficient is not 1 for class {}",
                cls.label
            )));
        }
        Ok(PsiValue {
            class_idx,
            coeffs,
            bound,
        })
    }

    /// Values on every class, in class order.
    pub fn psi_all(&self) -> Result<Vec<PsiValue>> {
        (0..self.group.classes.len())
            .map(|c| self.psi_of_class(c))
            .collect()
    }

    /// Index of the unipotent class induced by a computed value.
    pub fn theta_of(&self, value: &PsiValue) -> Result<usize> {
        let appearing: Vec<bool> = value.coeffs.iter().map(|p| !p.is_zero()).collect();
        springer::theta(&self.springer, &appearing)
    }

    /// Class-function values (one polynomial per conjugacy class) of a
    /// computed value.
    pub fn class_function(&self, value: &PsiValue) -> Vec<QPoly> {
        (0..self.group.classes.len())
            .map(|c| {
                let mut acc = QPoly::zero();
                for e in 0..self.table.len() {
                    if !value.coeffs[e].is_zero() {
                        acc = &acc + &value.coeffs[e].scale(&rat(self.table.values[e][c]));
                    }
                }
                acc
            })
            .collect()
    }

    /// Checks the trace identity and recomputes the value from every
    /// minimal representative, requiring exact agreement.
    pub fn min_rep_independent(&self, class_idx: usize) -> Result<()> {
        hecke::min_rep_trace_invariance(&self.group, &self.algebra, class_idx)?;
        let base = self.psi_of_class(class_idx)?;
        for &r in &self.group.classes[class_idx].min_reps {
            if self.psi_with_rep(class_idx, r)? != base {
                return Err(Error::Invariant(format!(
                    "value differs between minimal representatives of {}",
                    self.group.classes[class_idx].label
                )));
            }
        }
        Ok(())
    }

    /// For a non-elliptic class, compares the value with the class function
    /// induced from the standard parabolic in which a minimal member is
    /// elliptic; the two must agree.
    pub fn induction_check(&self, class_idx: usize) -> Result<bool> {
        let cls = &self.group.classes[class_idx];
        let levi = self
            .group
            .levi_for_class(class_idx)?
            .ok_or_else(|| Error::Invariant(format!("class {} is elliptic", cls.label)))?;
        let witness_word = self.group.element(levi.witness).word.clone();
        let mut sub_ctxs = Vec::new();
        let mut sub_fns: Vec<Vec<QPoly>> = Vec::new();
        for comp in &levi.components {
            let sub = PsiContext::new(comp.ctype)?;
            let part = restrict_word(&witness_word, &comp.letters);
            let u = sub.group.element_of_word(&part);
            let value = sub.psi_of_class(sub.group.class_of(u))?;
            sub_fns.push(sub.class_function(&value));
            sub_ctxs.push(sub);
        }
        let mut on_parabolic: HashMap<usize, QPoly> = HashMap::new();
        for (i, &elem) in levi.elements.iter().enumerate() {
            let mut prod = QPoly::one();
            for (kk, comp) in levi.components.iter().enumerate() {
                let part = restrict_word(&levi.words[i], &comp.letters);
                let u = sub_ctxs[kk].group.element_of_word(&part);
                prod = &prod * &sub_fns[kk][sub_ctxs[kk].group.class_of(u)];
            }
            on_parabolic.insert(elem, prod);
        }
        let induced = self
            .group
            .induce_class_function(&levi.elements, &|x| on_parabolic[&x].clone());
        let own = self.class_function(&self.psi_of_class(class_idx)?);
        Ok(own == induced)
    }
}

/// Letters of `word` lying in a parabolic component, renumbered to the
/// component's own generator indices.
fn restrict_word(word: &[u8], letters: &[usize]) -> Vec<u8> {
    word.iter()
        .filter_map(|&l| {
            letters
                .iter()
                .position(|&a| a == l as usize)
                .map(|p| p as u8)
        })
        .collect()
}

/// Whether the coefficient vectors read the same from both ends of the
/// degree range.
pub fn palindromic(value: &PsiValue) -> bool {
    (0..=value.bound / 2).all(|i| {
        value
            .coeffs
            .iter()
            .all(|p| p.coeff(i) == p.coeff(value.bound - i))
    })
}

/// `|W|^{-1} sum_C |C| chi(C) chi'(C) / det(q - w_C)`, symmetric in the
/// two characters.
fn build_third_factor(group: &WeylGroup, table: &CharTable) -> Result<QMatrix> {
    let k = table.len();
    let scale = RatFun::constant(rat_frac(1, group.order() as i64));
    let mut entries = vec![vec![RatFun::zero(); k]; k];
    for (c, cls) in group.classes.iter().enumerate() {
        let kernel = RatFun::new(QPoly::constant(rat(cls.size as i64)), cls.charpoly.clone())?;
        for e1 in 0..k {
            if table.values[e1][c] == 0 {
                continue;
            }
            for e2 in 0..=e1 {
                let prod = table.values[e1][c] * table.values[e2][c];
                if prod != 0 {
                    let s = &entries[e1][e2] + &(&kernel * &RatFun::constant(rat(prod)));
                    entries[e1][e2] = s;
                }
            }
        }
    }
    Ok(QMatrix::from_fn(k, k, |i, j| {
        let (a, b) = if i >= j { (i, j) } else { (j, i) };
        &entries[a][b] * &scale
    }))
}

/// One reference row: class display label, nonzero components as
/// `(character name, coefficients lowest first)`, expected unipotent label.
pub type GoldenRow = (
    &'static str,
    &'static [(&'static str, &'static [i64])],
    &'static str,
);

const GOLDEN_A1: &[GoldenRow] = &[
    ("1", &[("1", &[1]), ("sgn", &[1])], "[11]"),
    ("s", &[("1", &[1])], "[2]"),
];

const GOLDEN_A2: &[GoldenRow] = &[
    ("1", &[("1", &[1]), ("rho", &[2]), ("sgn", &[1])], "[111]"),
    ("s1", &[("1", &[1]), ("rho", &[1])], "[21]"),
    ("c", &[("1", &[1])], "[3]"),
];

const GOLDEN_B2: &[GoldenRow] = &[
    (
        "1",
        &[
            ("1", &[1]),
            ("rho", &[2]),
            ("eps1", &[1]),
            ("eps2", &[1]),
            ("sgn", &[1]),
        ],
        "[11111]",
    ),
    ("s1", &[("1", &[1]), ("rho", &[1]), ("eps1", &[1])], "[221]"),
    ("s2", &[("1", &[1]), ("rho", &[1]), ("eps2", &[1])], "[311]"),
    ("c", &[("1", &[1])], "[5]"),
    ("c^2", &[("1", &[1, 0, 1]), ("rho", &[0, 1])], "[311]"),
];

const GOLDEN_G2: &[GoldenRow] = &[
    (
        "1",
        &[
            ("1", &[1]),
            ("rho", &[2]),
            ("rho'", &[2]),
            ("eps1", &[1]),
            ("eps2", &[1]),
            ("sgn", &[1]),
        ],
        "1",
    ),
    (
        "s1",
        &[("1", &[1]), ("rho", &[1]), ("rho'", &[1]), ("eps1", &[1])],
        "A1",
    ),
    (
        "s2",
        &[("1", &[1]), ("rho", &[1]), ("rho'", &[1]), ("eps2", &[1])],
        "A1~",
    ),
    ("c", &[("1", &[1])], "G2"),
    ("c^2", &[("1", &[1, 0, 1]), ("rho", &[0, 1])], "G2(a1)"),
    (
        "c^3",
        &[
            ("1", &[1, 0, 1, 0, 1]),
            ("rho", &[0, 1, 0, 1]),
            ("rho'", &[0, 0, 1]),
        ],
        "A1~",
    ),
];

/// Frozen reference values for the rank-at-most-2 types.
pub fn golden_table(ctype: CartanType) -> Option<&'static [GoldenRow]> {
    match (ctype.family, ctype.rank) {
        (TypeFamily::A, 1) => Some(GOLDEN_A1),
        (TypeFamily::A, 2) => Some(GOLDEN_A2),
        (TypeFamily::B, 2) => Some(GOLDEN_B2),
        (TypeFamily::G, 2) => Some(GOLDEN_G2),
        _ => None,
    }
}

/// Compares computed values against the frozen reference table; returns
/// mismatch descriptions (empty means full agreement), or `None` when the
/// type has no reference table.
pub fn golden_mismatches(ctx: &PsiContext) -> Result<Option<Vec<String>>> {
    let Some(gold) = golden_table(ctx.ctype) else {
        return Ok(None);
    };
    let mut bad = Vec::new();
    for &(display, terms, unipotent) in gold {
        let Some(ci) = ctx
            .group
            .classes
            .iter()
            .position(|c| c.display == display)
        else {
            bad.push(format!("no class labelled {display}"));
            continue;
        };
        let value = ctx.psi_of_class(ci)?;
        let mut expect = vec![QPoly::zero(); ctx.table.len()];
        for &(name, coeffs) in terms {
            let e = ctx
                .table
                .irrep_index(name)
                .ok_or_else(|| Error::Invariant(format!("no character named {name}")))?;
            expect[e] = QPoly::from_ints(coeffs);
        }
        if value.coeffs != expect {
            bad.push(format!("value mismatch at class {display}"));
        }
        let t = ctx.theta_of(&value)?;
        if ctx.springer.classes[t].label != unipotent {
            bad.push(format!(
                "unipotent mismatch at class {display}: got {}",
                ctx.springer.classes[t].label
            ));
        }
    }
    Ok(Some(bad))
}

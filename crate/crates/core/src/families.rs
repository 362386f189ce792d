//! Partition of the irreducible characters into families, each carrying a
//! small symmetry group Gamma, and the exact pairing matrix on the set
//! M(Gamma) of pairs (class of x, irreducible of the centralizer of x).
//! The middle factor of the map assembled in `psi` is block diagonal with
//! one Fourier block per family.

use crate::coxeter::CartanType;
use crate::cyclo::Cyclo12;
use crate::error::{Error, Result};
use crate::exactalg::{rat, BigRat, QMatrix, RatFun};
use crate::wchars::{dixon_character_table, CharTable, GroupSpec};
use num_traits::Zero;
use std::cmp::Ordering;
use std::collections::HashMap;

/// Symmetry group attached to a family.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Gamma {
    One,
    Z2,
    S3,
    S4,
}

impl Gamma {
    pub fn parse(s: &str) -> Result<Gamma> {
        match s {
            "1" => Ok(Gamma::One),
            "Z2" => Ok(Gamma::Z2),
            "S3" => Ok(Gamma::S3),
            "S4" => Ok(Gamma::S4),
            other => Err(Error::Data(format!("unknown family group '{}'", other))),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Gamma::One => "1",
            Gamma::Z2 => "Z2",
            Gamma::S3 => "S3",
            Gamma::S4 => "S4",
        }
    }

    fn symbols(&self) -> usize {
        match self {
            Gamma::One => 1,
            Gamma::Z2 => 2,
            Gamma::S3 => 3,
            Gamma::S4 => 4,
        }
    }
}

fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&i| a[i]).collect()
}

fn invert(a: &[usize]) -> Vec<usize> {
    let mut out = vec![0; a.len()];
    for (i, &ai) in a.iter().enumerate() {
        out[ai] = i;
    }
    out
}

struct PermGroup {
    elems: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
    classes: Vec<Vec<usize>>,
    class_names: Vec<String>,
}

impl PermGroup {
    fn mul(&self, a: usize, b: usize) -> usize {
        self.index[&compose(&self.elems[a], &self.elems[b])]
    }

    fn inv(&self, a: usize) -> usize {
        self.index[&invert(&self.elems[a])]
    }
}

fn cycle_type(p: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; p.len()];
    let mut lens = Vec::new();
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut at = start;
        while !seen[at] {
            seen[at] = true;
            at = p[at];
            len += 1;
        }
        lens.push(len);
    }
    lens.sort_unstable_by(|a, b| b.cmp(a));
    lens
}

fn class_name(ct: &[usize]) -> String {
    let parts: String = ct.iter().filter(|&&l| l > 1).map(|l| format!("g{}", l)).collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts
    }
}

fn perm_group(gamma: Gamma) -> PermGroup {
    let n = gamma.symbols();
    // Elements in lexicographic order, so the identity is element 0.
    let mut elems = vec![vec![0usize; 0]];
    for _ in 0..n {
        let mut next = Vec::new();
        for partial in &elems {
            for v in 0..n {
                if !partial.contains(&v) {
                    let mut p = partial.clone();
                    p.push(v);
                    next.push(p);
                }
            }
        }
        elems = next;
    }
    elems.sort();
    let index: HashMap<Vec<usize>, usize> =
        elems.iter().cloned().zip(0..).collect();
    let order = elems.len();
    let mut class_of = vec![usize::MAX; order];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for x in 0..order {
        if class_of[x] != usize::MAX {
            continue;
        }
        let mut members: Vec<usize> = (0..order)
            .map(|g| index[&compose(&compose(&elems[g], &elems[x]), &invert(&elems[g]))])
            .collect();
        members.sort_unstable();
        members.dedup();
        for &m in &members {
            class_of[m] = classes.len();
        }
        classes.push(members);
    }
    let class_names = classes
        .iter()
        .map(|c| {
            if gamma == Gamma::Z2 && c[0] != 0 {
                "g".to_string()
            } else {
                class_name(&cycle_type(&elems[c[0]]))
            }
        })
        .collect();
    PermGroup { elems, index, classes, class_names }
}

fn cyclo_cmp(a: &Cyclo12, b: &Cyclo12) -> Ordering {
    a.coeffs()
        .iter()
        .zip(b.coeffs())
        .map(|(x, y)| x.cmp(y))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal)
}

struct CentralizerTable {
    /// Group element indices of the centralizer members, identity first.
    members: Vec<usize>,
    local_index: HashMap<usize, usize>,
    local_class_of: Vec<usize>,
    char_names: Vec<String>,
    values: Vec<Vec<Cyclo12>>,
}

impl CentralizerTable {
    fn value(&self, row: usize, group_elem: usize) -> &Cyclo12 {
        &self.values[row][self.local_class_of[self.local_index[&group_elem]]]
    }
}

fn centralizer_table(g: &PermGroup, x: usize) -> Result<CentralizerTable> {
    let members: Vec<usize> = (0..g.elems.len())
        .filter(|&y| g.mul(x, y) == g.mul(y, x))
        .collect();
    let local_index: HashMap<usize, usize> =
        members.iter().cloned().zip(0..).collect();
    let order = members.len();
    let mut local_class_of = vec![usize::MAX; order];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for u in 0..order {
        if local_class_of[u] != usize::MAX {
            continue;
        }
        let mut cls: Vec<usize> = (0..order)
            .map(|t| {
                let conj = g.mul(g.mul(members[t], members[u]), g.inv(members[t]));
                local_index[&conj]
            })
            .collect();
        cls.sort_unstable();
        cls.dedup();
        for &m in &cls {
            local_class_of[m] = classes.len();
        }
        classes.push(cls);
    }
    let raw = {
        let spec = GroupSpec {
            order,
            mul: Box::new(|a, b| local_index[&g.mul(members[a], members[b])]),
            inv: Box::new(|a| local_index[&g.inv(members[a])]),
            classes: classes.clone(),
        };
        dixon_character_table(&spec)?
    };
    let k = raw.degrees.len();
    let mut row_order: Vec<usize> = (0..k).collect();
    row_order.sort_by(|&a, &b| {
        raw.degrees[a].cmp(&raw.degrees[b]).then_with(|| {
            raw.values[b]
                .iter()
                .zip(&raw.values[a])
                .map(|(x, y)| cyclo_cmp(x, y))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal)
        })
    });
    let degrees: Vec<usize> = row_order.iter().map(|&r| raw.degrees[r]).collect();
    let values: Vec<Vec<Cyclo12>> = row_order.iter().map(|&r| raw.values[r].clone()).collect();

    // Stable names: the ones data files may mention where the structure
    // pins them down, synthetic fallbacks elsewhere.
    let mut names: Vec<Option<String>> = vec![None; k];
    let trivial = values
        .iter()
        .position(|row| row.iter().all(|v| *v == Cyclo12::one()))
        .ok_or_else(|| Error::Invariant("centralizer lacks a trivial character".into()))?;
    names[trivial] = Some("1".into());
    let abelian = classes.len() == order;
    if order == 2 {
        names[1 - trivial] = Some("eps".into());
    } else if order == 3 {
        let xc = local_class_of[local_index[&x]];
        for (r, row) in values.iter().enumerate() {
            if row[xc] == Cyclo12::root_of_unity(3, 1) {
                names[r] = Some("om".into());
            } else if row[xc] == Cyclo12::root_of_unity(3, 2) {
                names[r] = Some("om2".into());
            }
        }
    } else if order == 6 && !abelian {
        for (r, name) in names.iter_mut().enumerate() {
            if name.is_none() {
                *name = Some(if degrees[r] == 1 { "eps".into() } else { "r".into() });
            }
        }
    }
    for (r, name) in names.iter_mut().enumerate() {
        if name.is_none() {
            *name = Some(format!("x{}", r));
        }
    }
    Ok(CentralizerTable {
        members,
        local_index,
        local_class_of,
        char_names: names.into_iter().map(Option::unwrap).collect(),
        values,
    })
}

/// The pairing matrix on M(Gamma), with slot labels (class, character).
pub struct FourierData {
    pub gamma: Gamma,
    pub labels: Vec<(String, String)>,
    pub matrix: Vec<Vec<BigRat>>,
}

impl FourierData {
    pub fn slot(&self, class: &str, chr: &str) -> Option<usize> {
        self.labels.iter().position(|(c, h)| c == class && h == chr)
    }
}

/// Computes the exact pairing matrix of `gamma` and verifies that it is
/// symmetric and squares to the identity.
pub fn fourier_matrix(gamma: Gamma) -> Result<FourierData> {
    let g = perm_group(gamma);
    let order = g.elems.len();
    let cents: Vec<CentralizerTable> = g
        .classes
        .iter()
        .map(|c| centralizer_table(&g, c[0]))
        .collect::<Result<_>>()?;
    let mut labels = Vec::new();
    let mut slots = Vec::new();
    for (ci, cent) in cents.iter().enumerate() {
        for r in 0..cent.char_names.len() {
            labels.push((g.class_names[ci].clone(), cent.char_names[r].clone()));
            slots.push((ci, r));
        }
    }
    let m = labels.len();
    let mut matrix = vec![vec![rat(0); m]; m];
    for (si, &(ci, ri)) in slots.iter().enumerate() {
        let x = g.classes[ci][0];
        let zx = &cents[ci];
        for (sj, &(cj, rj)) in slots.iter().enumerate() {
            let y = g.classes[cj][0];
            let zy = &cents[cj];
            let mut acc = Cyclo12::zero();
            for gg in 0..order {
                let u = g.mul(g.mul(gg, y), g.inv(gg));
                if g.mul(x, u) != g.mul(u, x) {
                    continue;
                }
                let v = g.mul(g.mul(g.inv(gg), x), gg);
                let term = zx.value(ri, u) * &zy.value(rj, v).conj();
                acc = &acc + &term;
            }
            let scale = BigRat::new(
                1.into(),
                ((zx.members.len() * zy.members.len()) as i64).into(),
            );
            let entry = acc
                .scale(&scale)
                .as_rational()
                .ok_or_else(|| Error::Invariant("irrational pairing entry".into()))?;
            if !(rat(order as i64) * &entry).is_integer() {
                return Err(Error::Invariant(
                    "pairing denominator does not divide the group order".into(),
                ));
            }
            matrix[si][sj] = entry;
        }
    }
    for i in 0..m {
        for j in 0..m {
            if matrix[i][j] != matrix[j][i] {
                return Err(Error::Invariant("pairing matrix is not symmetric".into()));
            }
            let dot: BigRat = (0..m).map(|t| &matrix[i][t] * &matrix[t][j]).sum();
            let expect = rat(if i == j { 1 } else { 0 });
            if dot != expect {
                return Err(Error::Invariant("pairing matrix does not square to one".into()));
            }
        }
    }
    Ok(FourierData { gamma, labels, matrix })
}

/// One family: its group, the member irreducibles, and their slots in
/// M(Gamma).
pub struct FamilyDatum {
    pub gamma: Gamma,
    pub members: Vec<usize>,
    pub slots: Vec<usize>,
}

/// Parses and validates the family description for one type. Families must
/// partition the irreducibles and slots must be distinct within a family.
pub fn parse_families(body: &str, table: &CharTable) -> Result<Vec<FamilyDatum>> {
    let mut fouriers: HashMap<&'static str, FourierData> = HashMap::new();
    let mut families: Vec<(Gamma, Vec<(String, String, String)>)> = Vec::new();
    for raw_line in body.lines() {
        let line = raw_line.trim();
        if line.is_empty() {
            continue;
        }
        if line.starts_with("[family") {
            families.push((Gamma::One, Vec::new()));
        } else if let Some(rest) = line.strip_prefix("gamma =") {
            let fam = families
                .last_mut()
                .ok_or_else(|| Error::Data("gamma line outside a family".into()))?;
            fam.0 = Gamma::parse(rest.trim())?;
        } else if let Some(rest) = line.strip_prefix("member ") {
            let (name, slot) = rest
                .split_once('=')
                .ok_or_else(|| Error::Data(format!("malformed member line '{}'", line)))?;
            let slot = slot.trim();
            let inner = slot
                .strip_prefix('(')
                .and_then(|s| s.strip_suffix(')'))
                .ok_or_else(|| Error::Data(format!("malformed slot in '{}'", line)))?;
            let (cls, chr) = inner
                .split_once(',')
                .ok_or_else(|| Error::Data(format!("malformed slot in '{}'", line)))?;
            let fam = families
                .last_mut()
                .ok_or_else(|| Error::Data("member line outside a family".into()))?;
            fam.1.push((
                name.trim().to_string(),
                cls.trim().to_string(),
                chr.trim().to_string(),
            ));
        } else {
            return Err(Error::Data(format!("unrecognized line '{}'", line)));
        }
    }

    let mut out = Vec::with_capacity(families.len());
    let mut used = vec![false; table.len()];
    for (gamma, entries) in families {
        if entries.is_empty() {
            return Err(Error::Data("family without members".into()));
        }
        if gamma == Gamma::One && entries.len() != 1 {
            return Err(Error::Data("trivial-group family must be a singleton".into()));
        }
        if !fouriers.contains_key(gamma.name()) {
            fouriers.insert(gamma.name(), fourier_matrix(gamma)?);
        }
        let fourier = &fouriers[gamma.name()];
        let mut members = Vec::new();
        let mut slots = Vec::new();
        for (name, cls, chr) in &entries {
            let irrep = table
                .irrep_index(name)
                .ok_or_else(|| Error::Data(format!("unknown irreducible '{}'", name)))?;
            if used[irrep] {
                return Err(Error::Data(format!("irreducible '{}' listed twice", name)));
            }
            used[irrep] = true;
            let slot = fourier
                .slot(cls, chr)
                .ok_or_else(|| Error::Data(format!("unknown slot ({}, {})", cls, chr)))?;
            if slots.contains(&slot) {
                return Err(Error::Data(format!("slot ({}, {}) used twice", cls, chr)));
            }
            members.push(irrep);
            slots.push(slot);
        }
        out.push(FamilyDatum { gamma, members, slots });
    }
    if !used.iter().all(|&u| u) {
        return Err(Error::Data("families do not cover every irreducible".into()));
    }
    Ok(out)
}

/// Block-diagonal middle factor: within each family the Fourier block, and
/// implicitly zero across families.
pub fn a_prime(table: &CharTable, families: &[FamilyDatum]) -> Result<Vec<Vec<BigRat>>> {
    let k = table.len();
    let mut ap = vec![vec![rat(0); k]; k];
    for fam in families {
        let fourier = fourier_matrix(fam.gamma)?;
        for (ai, &ea) in fam.members.iter().enumerate() {
            for (bi, &eb) in fam.members.iter().enumerate() {
                ap[ea][eb] = fourier.matrix[fam.slots[ai]][fam.slots[bi]].clone();
            }
        }
    }
    let unit: Vec<BigRat> = (0..k)
        .map(|j| rat(if j == table.trivial { 1 } else { 0 }))
        .collect();
    if ap[table.trivial] != unit {
        return Err(Error::Invariant(
            "trivial character row of the middle factor is not a unit row".into(),
        ));
    }
    Ok(ap)
}

/// Exact determinant of the middle factor, with an invertibility verdict.
pub fn a_prime_invertible(ap: &[Vec<BigRat>]) -> Result<(bool, BigRat)> {
    let k = ap.len();
    let m = QMatrix::from_fn(k, k, |i, j| RatFun::constant(ap[i][j].clone()));
    let det = m.det().to_poly()?;
    let value = det.coeff(0);
    Ok((!value.is_zero(), value))
}

/// Convenience: loads, validates, and returns the family data for a type
/// together with the file it came from.
pub fn load_families(
    ctype: CartanType,
    table: &CharTable,
) -> Result<(Vec<FamilyDatum>, crate::data::DataFile)> {
    let file = crate::data::family_file(&ctype.name())?;
    let fams = parse_families(&file.body, table)?;
    Ok((fams, file))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::WeylGroup;
    use crate::exactalg::rat_frac;
    use crate::wchars::char_table;

    #[test]
    fn z2_pairing_matrix() {
        let f = fourier_matrix(Gamma::Z2).unwrap();
        assert_eq!(
            f.labels,
            [
                ("1".to_string(), "1".to_string()),
                ("1".to_string(), "eps".to_string()),
                ("g".to_string(), "1".to_string()),
                ("g".to_string(), "eps".to_string()),
            ]
        );
        let h = rat_frac(1, 2);
        let expect: Vec<Vec<BigRat>> = [
            [1, 1, 1, 1],
            [1, 1, -1, -1],
            [1, -1, 1, -1],
            [1, -1, -1, 1],
        ]
        .iter()
        .map(|row| row.iter().map(|&v| rat(v) * &h).collect())
        .collect();
        assert_eq!(f.matrix, expect);
    }

    #[test]
    fn s3_pairing_block_for_the_large_family() {
        let f = fourier_matrix(Gamma::S3).unwrap();
        assert_eq!(f.labels.len(), 8);
        let slots = [
            f.slot("1", "1").unwrap(),
            f.slot("g2", "1").unwrap(),
            f.slot("g3", "1").unwrap(),
            f.slot("g3", "om").unwrap(),
        ];
        let expect = [
            [rat_frac(1, 6), rat_frac(1, 2), rat_frac(1, 3), rat_frac(1, 3)],
            [rat_frac(1, 2), rat_frac(1, 2), rat(0), rat(0)],
            [rat_frac(1, 3), rat(0), rat_frac(2, 3), rat_frac(-1, 3)],
            [rat_frac(1, 3), rat(0), rat_frac(-1, 3), rat_frac(2, 3)],
        ];
        for (i, &si) in slots.iter().enumerate() {
            for (j, &sj) in slots.iter().enumerate() {
                assert_eq!(f.matrix[si][sj], expect[i][j], "slot pair {} {}", i, j);
            }
        }
    }

    #[test]
    fn s4_pairing_builds_and_validates() {
        let f = fourier_matrix(Gamma::S4).unwrap();
        assert_eq!(f.labels.len(), 21);
    }

    #[test]
    fn b2_families_and_middle_factor() {
        let w = WeylGroup::build(CartanType::parse("B2").unwrap()).unwrap();
        let t = char_table(&w).unwrap();
        let (fams, _) = load_families(w.ctype, &t).unwrap();
        assert_eq!(fams.len(), 3);
        let big = fams.iter().find(|f| f.members.len() == 3).unwrap();
        assert_eq!(big.gamma, Gamma::Z2);
        let ap = a_prime(&t, &fams).unwrap();
        let idx = |n: &str| t.irrep_index(n).unwrap();
        let h = rat_frac(1, 2);
        assert_eq!(ap[idx("rho")][idx("rho")], h);
        assert_eq!(ap[idx("rho")][idx("eps1")], h);
        assert_eq!(ap[idx("rho")][idx("eps2")], h);
        assert_eq!(ap[idx("eps1")][idx("eps2")], rat_frac(-1, 2));
        assert_eq!(ap[idx("eps2")][idx("eps2")], h);
        assert_eq!(ap[idx("1")][idx("1")], rat(1));
        assert_eq!(ap[idx("1")][idx("rho")], rat(0));
        assert_eq!(ap[idx("sgn")][idx("sgn")], rat(1));
        let (ok, det) = a_prime_invertible(&ap).unwrap();
        assert!(ok);
        assert_eq!(det, rat_frac(-1, 2));
    }

    #[test]
    fn all_supported_types_have_invertible_middle_factor() {
        for name in CartanType::supported_names() {
            let w = WeylGroup::build(CartanType::parse(name).unwrap()).unwrap();
            let t = char_table(&w).unwrap();
            let (fams, _) = load_families(w.ctype, &t).unwrap();
            let ap = a_prime(&t, &fams).unwrap();
            let (ok, _) = a_prime_invertible(&ap).unwrap();
            assert!(ok, "{}", name);
        }
    }

    #[test]
    fn malformed_family_data_is_rejected() {
        let w = WeylGroup::build(CartanType::parse("A1").unwrap()).unwrap();
        let t = char_table(&w).unwrap();
        let missing = "[family 1]\ngamma = 1\nmember 1 = (1, 1)\n";
        assert!(matches!(parse_families(missing, &t), Err(Error::Data(_))));
        let unknown = format!("{}[family 2]\ngamma = 1\nmember zeta = (1, 1)\n", missing);
        assert!(matches!(parse_families(&unknown, &t), Err(Error::Data(_))));
        let dup = "[family 1]\ngamma = 1\nmember 1 = (1, 1)\n[family 2]\ngamma = Z2\nmember sgn = (1, 1)\nmember sgn = (g, 1)\n";
        assert!(matches!(parse_families(dup, &t), Err(Error::Data(_))));
    }
}

//! Finite Weyl groups: exact integer-matrix realization on the simple-root
//! basis, reduced words, conjugacy classes with minimal-length
//! representatives, reflection-representation invariants, and standard
//! parabolic (Levi) subgroup machinery.

use crate::error::{Error, Result};
use crate::exactalg::{rat_frac, QMatrix, QPoly, RatFun};
use std::collections::HashMap;

/// Infinite-family letter of a Cartan type.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum TypeFamily {
    A,
    B,
    G,
    F,
}

/// Cartan type such as `B3`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct CartanType {
    pub family: TypeFamily,
    pub rank: usize,
}

impl CartanType {
    pub const fn new(family: TypeFamily, rank: usize) -> Self {
        CartanType { family, rank }
    }

    /// Parses `"A1"`-style names; accepts the computable range only.
    pub fn parse(s: &str) -> Result<CartanType> {
        let err = || Error::UnknownType(s.to_string());
        let mut chars = s.trim().chars();
        let letter = chars.next().ok_or_else(err)?;
        let rank: usize = chars.as_str().parse().map_err(|_| err())?;
        let family = match letter {
            'A' | 'a' => TypeFamily::A,
            'B' | 'b' => TypeFamily::B,
            'G' | 'g' => TypeFamily::G,
            'F' | 'f' => TypeFamily::F,
            _ => return Err(err()),
        };
        let ok = matches!(
            (family, rank),
            (TypeFamily::A, 1..=3) | (TypeFamily::B, 2..=3) | (TypeFamily::G, 2) | (TypeFamily::F, 4)
        );
        if !ok {
            return Err(err());
        }
        Ok(CartanType { family, rank })
    }

    pub fn name(&self) -> String {
        let letter = match self.family {
            TypeFamily::A => 'A',
            TypeFamily::B => 'B',
            TypeFamily::G => 'G',
            TypeFamily::F => 'F',
        };
        format!("{}{}", letter, self.rank)
    }

    /// Types with full pipeline support in this build.
    pub fn supported_names() -> &'static [&'static str] {
        &["A1", "A2", "A3", "B2", "B3", "G2"]
    }

    /// F4 builds as a group but ships no Hecke/family/Springer data.
    pub fn is_supported(&self) -> bool {
        self.family != TypeFamily::F
    }

    /// Cartan matrix with entries `C[i][j] = <alpha_j, alpha_i-check>`;
    /// B types have the last simple root short, G2 the first root long.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let r = self.rank;
        let mut c = vec![vec![0i64; r]; r];
        for i in 0..r {
            c[i][i] = 2;
        }
        match self.family {
            TypeFamily::A => {
                for i in 1..r {
                    c[i][i - 1] = -1;
                    c[i - 1][i] = -1;
                }
            }
            TypeFamily::B => {
                for i in 1..r {
                    c[i][i - 1] = -1;
                    c[i - 1][i] = -1;
                }
                c[r - 1][r - 2] = -2;
            }
            TypeFamily::G => {
                c[0][1] = -1;
                c[1][0] = -3;
            }
            TypeFamily::F => {
                for i in 1..r {
                    c[i][i - 1] = -1;
                    c[i - 1][i] = -1;
                }
                c[2][1] = -2;
            }
        }
        c
    }

    /// Degrees of the basic invariants; their product is the group order.
    pub fn degrees(&self) -> Vec<usize> {
        match self.family {
            TypeFamily::A => (2..=self.rank + 1).collect(),
            TypeFamily::B => (1..=self.rank).map(|i| 2 * i).collect(),
            TypeFamily::G => vec![2, 6],
            TypeFamily::F => vec![2, 6, 8, 12],
        }
    }

    pub fn order(&self) -> usize {
        self.degrees().iter().product()
    }
}

impl std::fmt::Display for CartanType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Group element: lexicographically least reduced word plus the cached
/// integer matrix on the simple-root basis (row-major).
#[derive(Clone, Debug)]
pub struct WElement {
    pub word: Vec<u8>,
    pub mat: Vec<i64>,
}

impl WElement {
    pub fn length(&self) -> usize {
        self.word.len()
    }
}

/// Conjugacy class with its minimal-length representatives and the
/// reflection-representation invariants.
#[derive(Clone, Debug)]
pub struct ConjClass {
    /// Canonical identifier: the least reduced word, rendered `s1*s2`.
    pub label: String,
    /// Per-type display alias (`c^2`, `[21|]`, ...).
    pub display: String,
    /// Members sorted by (length, word).
    pub members: Vec<usize>,
    /// All members of minimal length.
    pub min_reps: Vec<usize>,
    /// The canonical minimal representative (least word).
    pub rep: usize,
    pub min_length: usize,
    pub size: usize,
    /// Multiplicity of eigenvalue 1 on the reflection representation.
    pub m: usize,
    pub elliptic: bool,
    /// `det(1 - w)` on the reflection representation.
    pub n_w: i64,
    /// `det(q - w)` on the reflection representation.
    pub charpoly: QPoly,
}

/// Connected component of a parabolic subset, matched to a standard type;
/// `letters[a]` is the ambient generator playing standard generator `a`.
#[derive(Clone, Debug)]
pub struct LeviComponent {
    pub ctype: CartanType,
    pub letters: Vec<usize>,
}

/// Standard parabolic subgroup data for a non-elliptic class.
#[derive(Clone, Debug)]
pub struct LeviDatum {
    /// The parabolic subset J, sorted.
    pub subset: Vec<usize>,
    /// Element index of the minimal-length class member inside W_J.
    pub witness: usize,
    /// Positive-root count difference between the group and the parabolic.
    pub omega: usize,
    /// Subgroup elements (ambient indices) in discovery order.
    pub elements: Vec<usize>,
    /// Reduced words of the subgroup elements over the ambient letters.
    pub words: Vec<Vec<u8>>,
    pub components: Vec<LeviComponent>,
}

/// Fully enumerated Weyl group.
pub struct WeylGroup {
    pub ctype: CartanType,
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    elements: Vec<WElement>,
    index: HashMap<Vec<i64>, usize>,
    rmul: Vec<Vec<usize>>,
    inv: Vec<usize>,
    /// Number of positive roots (length of the longest element).
    pub nu: usize,
    pub classes: Vec<ConjClass>,
    class_of: Vec<usize>,
}

fn mat_mul(a: &[i64], b: &[i64], r: usize) -> Vec<i64> {
    let mut out = vec![0i64; r * r];
    for i in 0..r {
        for k in 0..r {
            let av = a[i * r + k];
            if av == 0 {
                continue;
            }
            for j in 0..r {
                out[i * r + j] += av * b[k * r + j];
            }
        }
    }
    out
}

fn word_string(word: &[u8]) -> String {
    if word.is_empty() {
        "e".to_string()
    } else {
        word.iter()
            .map(|&s| format!("s{}", s + 1))
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// Partitions of `n` in descending-part form, largest first.
fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=max.min(n)).rev() {
            prefix.push(part);
            rec(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

fn parts_string(parts: &[usize]) -> String {
    parts.iter().map(usize::to_string).collect()
}

impl WeylGroup {
    pub fn build(ctype: CartanType) -> Result<WeylGroup> {
        let r = ctype.rank;
        let cartan = ctype.cartan_matrix();
        let mut gens = Vec::with_capacity(r);
        for i in 0..r {
            // s_i sends alpha_j to alpha_j - C[i][j] alpha_i.
            let mut g = vec![0i64; r * r];
            for j in 0..r {
                g[j * r + j] = 1;
            }
            for j in 0..r {
                g[i * r + j] -= cartan[i][j];
            }
            gens.push(g);
        }

        let mut id = vec![0i64; r * r];
        for i in 0..r {
            id[i * r + i] = 1;
        }
        let mut elements = vec![WElement { word: vec![], mat: id.clone() }];
        let mut index = HashMap::new();
        index.insert(id, 0usize);
        let mut rmul: Vec<Vec<usize>> = Vec::new();
        let mut head = 0;
        while head < elements.len() {
            let mut row = Vec::with_capacity(r);
            for s in 0..r {
                let mat = mat_mul(&elements[head].mat, &gens[s], r);
                let idx = match index.get(&mat) {
                    Some(&i) => i,
                    None => {
                        let mut word = elements[head].word.clone();
                        word.push(s as u8);
                        let i = elements.len();
                        index.insert(mat.clone(), i);
                        elements.push(WElement { word, mat });
                        i
                    }
                };
                row.push(idx);
            }
            rmul.push(row);
            head += 1;
        }
        if elements.len() != ctype.order() {
            return Err(Error::Invariant(format!(
                "group order {} does not match the product formula {}",
                elements.len(),
                ctype.order()
            )));
        }

        let nu = elements.iter().map(WElement::length).max().unwrap_or(0);
        let mut inv = vec![0usize; elements.len()];
        for (i, e) in elements.iter().enumerate() {
            let mut acc = 0usize;
            for &s in e.word.iter().rev() {
                acc = rmul[acc][s as usize];
            }
            inv[i] = acc;
        }

        let mut group = WeylGroup {
            ctype,
            rank: r,
            cartan,
            elements,
            index,
            rmul,
            inv,
            nu,
            classes: vec![],
            class_of: vec![],
        };
        group.build_classes()?;
        Ok(group)
    }

    fn build_classes(&mut self) -> Result<()> {
        let n = self.elements.len();
        let r = self.rank;
        let mut seen = vec![false; n];
        let mut raw: Vec<Vec<usize>> = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut members = vec![start];
            seen[start] = true;
            let mut head = 0;
            while head < members.len() {
                let x = members[head];
                for s in 0..r {
                    // Conjugation by the involution s: s * x * s.
                    let y = self.rmul[self.lmul(s, x)][s];
                    if !seen[y] {
                        seen[y] = true;
                        members.push(y);
                    }
                }
                head += 1;
            }
            raw.push(members);
        }

        let mut classes = Vec::with_capacity(raw.len());
        for mut members in raw {
            members.sort_by(|&a, &b| {
                let (ea, eb) = (&self.elements[a], &self.elements[b]);
                ea.length().cmp(&eb.length()).then_with(|| ea.word.cmp(&eb.word))
            });
            let rep = members[0];
            let min_length = self.elements[rep].length();
            let min_reps: Vec<usize> = members
                .iter()
                .copied()
                .take_while(|&i| self.elements[i].length() == min_length)
                .collect();
            let charpoly = self.reflection_charpoly(rep);
            for &w in &members {
                if self.reflection_charpoly(w) != charpoly {
                    return Err(Error::Invariant(
                        "characteristic polynomial not constant on a class".into(),
                    ));
                }
            }
            let mut m = 0;
            let q_minus_1 = QPoly::from_ints(&[-1, 1]);
            let mut rest = charpoly.clone();
            loop {
                let (quot, rem) = rest.divmod(&q_minus_1)?;
                if rem.is_zero() {
                    m += 1;
                    rest = quot;
                } else {
                    break;
                }
            }
            let n_w_rat = charpoly.eval(&crate::exactalg::rat(1));
            if !n_w_rat.is_integer() {
                return Err(Error::Invariant("non-integer det(1-w)".into()));
            }
            let n_w = i64::try_from(n_w_rat.to_integer())
                .map_err(|_| Error::Invariant("det(1-w) overflow".into()))?;
            let elliptic = m == 0;
            if elliptic != (n_w > 0) || (!elliptic && n_w != 0) {
                return Err(Error::Invariant(
                    "ellipticity, m, and det(1-w) disagree".into(),
                ));
            }
            let size = members.len();
            classes.push(ConjClass {
                label: word_string(&self.elements[rep].word),
                display: String::new(),
                members,
                min_reps,
                rep,
                min_length,
                size,
                m,
                elliptic,
                n_w,
                charpoly,
            });
        }

        classes.sort_by(|a, b| {
            a.min_length
                .cmp(&b.min_length)
                .then_with(|| self.elements[a.rep].word.cmp(&self.elements[b.rep].word))
        });
        let mut class_of = vec![0usize; n];
        for (c, cls) in classes.iter().enumerate() {
            for &x in &cls.members {
                class_of[x] = c;
            }
        }
        self.classes = classes;
        self.class_of = class_of;
        self.assign_displays()?;
        Ok(())
    }

    fn assign_displays(&mut self) -> Result<()> {
        let displays = match (self.ctype.family, self.rank) {
            (TypeFamily::A, 1) | (TypeFamily::A, 2) | (TypeFamily::B, 2) | (TypeFamily::G, 2) => {
                self.coxeter_power_displays()?
            }
            (TypeFamily::A, _) => self.cycle_displays_a()?,
            (TypeFamily::B, _) => self.cycle_displays_b()?,
            _ => self.classes.iter().map(|c| c.label.clone()).collect(),
        };
        for (cls, d) in self.classes.iter_mut().zip(displays) {
            cls.display = d;
        }
        Ok(())
    }

    /// Labels 1, s (rank 1) or 1, s1, s2, c, c^2, ... (rank 2 and A2).
    fn coxeter_power_displays(&self) -> Result<Vec<String>> {
        let mut names: Vec<Option<String>> = vec![None; self.classes.len()];
        names[self.class_of[0]] = Some("1".to_string());
        for i in 0..self.rank {
            let c = self.class_of[self.simple_reflection(i)];
            if names[c].is_none() {
                names[c] = Some(if self.rank == 1 {
                    "s".to_string()
                } else {
                    format!("s{}", i + 1)
                });
            }
        }
        let cox = self.coxeter_element();
        let mut p = cox;
        let mut k = 1;
        while p != 0 {
            let c = self.class_of[p];
            if names[c].is_none() {
                names[c] = Some(if k == 1 {
                    "c".to_string()
                } else {
                    format!("c^{}", k)
                });
            }
            p = self.mult(p, cox);
            k += 1;
        }
        names
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::Invariant("class display labels incomplete".into()))
    }

    /// Cycle-type labels for type A via the reflection charpoly, which is
    /// `prod (q^{lambda_i}-1) / (q-1)` and injective on these ranks.
    fn cycle_displays_a(&self) -> Result<Vec<String>> {
        let n = self.rank + 1;
        let q_minus_1 = QPoly::from_ints(&[-1, 1]);
        let mut table: HashMap<String, String> = HashMap::new();
        for parts in partitions(n) {
            let mut p = QPoly::one();
            for &part in &parts {
                let mut f = QPoly::monomial(crate::exactalg::rat(1), part);
                f = &f - &QPoly::one();
                p = &p * &f;
            }
            let p = p.exact_div(&q_minus_1)?;
            let label = format!("[{}]", parts_string(&parts));
            if table.insert(p.to_string(), label).is_some() {
                return Err(Error::Invariant("cycle charpoly collision in type A".into()));
            }
        }
        self.classes
            .iter()
            .map(|c| {
                table
                    .get(&c.charpoly.to_string())
                    .cloned()
                    .ok_or_else(|| Error::Invariant(format!("unmatched charpoly {}", c.charpoly)))
            })
            .collect()
    }

    /// Signed-cycle-type labels for type B, read off from the matrix in the
    /// standard coordinate basis (the charpoly alone is ambiguous).
    fn cycle_displays_b(&self) -> Result<Vec<String>> {
        let r = self.rank;
        self.classes
            .iter()
            .map(|cls| {
                let me = self.coordinate_matrix(cls.rep)?;
                // Signed permutation: image(j) = (i, sign).
                let mut image = Vec::with_capacity(r);
                for j in 0..r {
                    let mut hit = None;
                    for i in 0..r {
                        match me[i * r + j] {
                            0 => {}
                            s @ (1 | -1) if hit.is_none() => hit = Some((i, s)),
                            _ => {
                                return Err(Error::Invariant(
                                    "coordinate matrix is not a signed permutation".into(),
                                ))
                            }
                        }
                    }
                    image.push(hit.ok_or_else(|| {
                        Error::Invariant("coordinate matrix has a zero column".into())
                    })?);
                }
                let mut seen = vec![false; r];
                let mut pos = Vec::new();
                let mut neg = Vec::new();
                for start in 0..r {
                    if seen[start] {
                        continue;
                    }
                    let mut len = 0;
                    let mut sign = 1i64;
                    let mut j = start;
                    loop {
                        seen[j] = true;
                        len += 1;
                        let (i, s) = image[j];
                        sign *= s;
                        j = i;
                        if j == start {
                            break;
                        }
                    }
                    if sign > 0 {
                        pos.push(len);
                    } else {
                        neg.push(len);
                    }
                }
                pos.sort_unstable_by(|a, b| b.cmp(a));
                neg.sort_unstable_by(|a, b| b.cmp(a));
                Ok(format!("[{}|{}]", parts_string(&pos), parts_string(&neg)))
            })
            .collect()
    }

    /// Conjugates the root-basis matrix into the standard coordinate basis
    /// `e_j = alpha_j + ... + alpha_r` of type B.
    fn coordinate_matrix(&self, x: usize) -> Result<Vec<i64>> {
        let r = self.rank;
        let m = &self.elements[x].mat;
        // E[i][j] = 1 for i >= j, E^{-1} upper bidiagonal with -1 above.
        let e = |i: usize, j: usize| -> i64 { i64::from(i >= j) };
        let einv = |i: usize, j: usize| -> i64 {
            if i == j {
                1
            } else if i == j + 1 {
                -1
            } else {
                0
            }
        };
        let mut out = vec![0i64; r * r];
        for i in 0..r {
            for j in 0..r {
                let mut acc = 0;
                for a in 0..r {
                    for b in 0..r {
                        acc += einv(i, a) * m[a * r + b] * e(b, j);
                    }
                }
                out[i * r + j] = acc;
            }
        }
        Ok(out)
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn element(&self, i: usize) -> &WElement {
        &self.elements[i]
    }

    pub fn element_index(&self, mat: &[i64]) -> Option<usize> {
        self.index.get(mat).copied()
    }

    pub fn length(&self, i: usize) -> usize {
        self.elements[i].length()
    }

    /// Index of `s_i` as a group element.
    pub fn simple_reflection(&self, i: usize) -> usize {
        self.rmul[0][i]
    }

    /// Product of all simple reflections in index order.
    pub fn coxeter_element(&self) -> usize {
        (0..self.rank).fold(0, |acc, s| self.rmul[acc][s])
    }

    pub fn right_mult(&self, x: usize, s: usize) -> usize {
        self.rmul[x][s]
    }

    fn lmul(&self, s: usize, x: usize) -> usize {
        let mut acc = self.rmul[0][s];
        for &t in self.elements[x].word.clone().iter() {
            acc = self.rmul[acc][t as usize];
        }
        acc
    }

    pub fn mult(&self, a: usize, b: usize) -> usize {
        let word = &self.elements[b].word;
        let mut acc = a;
        for &s in word.iter() {
            acc = self.rmul[acc][s as usize];
        }
        acc
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mult(self.mult(g, x), self.inv[g])
    }

    /// Applies a word (over generator indices) starting from the identity.
    pub fn element_of_word(&self, word: &[u8]) -> usize {
        word.iter().fold(0, |acc, &s| self.rmul[acc][s as usize])
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut acc = x;
        let mut n = 1;
        while acc != 0 {
            acc = self.mult(acc, x);
            n += 1;
        }
        n
    }

    pub fn power(&self, x: usize, t: usize) -> usize {
        (0..t).fold(0, |acc, _| self.mult(acc, x))
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn identity_class(&self) -> usize {
        self.class_of[0]
    }

    pub fn coxeter_class(&self) -> usize {
        self.class_of[self.coxeter_element()]
    }

    /// Trace of the reflection representation at a class representative.
    pub fn reflection_trace(&self, class_idx: usize) -> i64 {
        let m = &self.elements[self.classes[class_idx].rep].mat;
        (0..self.rank).map(|i| m[i * self.rank + i]).sum()
    }

    /// `det(q*I - rho(w))`, a monic integer polynomial of degree `rank`.
    pub fn reflection_charpoly(&self, x: usize) -> QPoly {
        let r = self.rank;
        let m = &self.elements[x].mat;
        let qm = QMatrix::from_fn(r, r, |i, j| {
            let mut p = QPoly::from_ints(&[-m[i * r + j]]);
            if i == j {
                p = &p + &QPoly::q();
            }
            RatFun::from_poly(p)
        });
        qm.det().to_poly().expect("polynomial determinant")
    }

    /// Poincare identity: sum of q^{|w|} versus the degree product formula.
    pub fn poincare_check(&self) -> bool {
        let mut lhs = QPoly::zero();
        for e in &self.elements {
            lhs = &lhs + &QPoly::monomial(crate::exactalg::rat(1), e.length());
        }
        let q_minus_1 = QPoly::from_ints(&[-1, 1]);
        let mut rhs = QPoly::one();
        for d in self.ctype.degrees() {
            let f = &QPoly::monomial(crate::exactalg::rat(1), d) - &QPoly::one();
            let f = match f.exact_div(&q_minus_1) {
                Ok(f) => f,
                Err(_) => return false,
            };
            rhs = &rhs * &f;
        }
        lhs == rhs
    }

    /// Enumerates the standard parabolic subgroup W_J; returns ambient
    /// element indices with their reduced words over the ambient letters.
    pub fn subgroup_elements(&self, subset: &[usize]) -> (Vec<usize>, Vec<Vec<u8>>) {
        let mut elems = vec![0usize];
        let mut words: Vec<Vec<u8>> = vec![vec![]];
        let mut pos: HashMap<usize, usize> = HashMap::new();
        pos.insert(0, 0);
        let mut head = 0;
        while head < elems.len() {
            for &s in subset {
                let y = self.rmul[elems[head]][s];
                if !pos.contains_key(&y) {
                    pos.insert(y, elems.len());
                    let mut w = words[head].clone();
                    w.push(s as u8);
                    elems.push(y);
                    words.push(w);
                }
            }
            head += 1;
        }
        (elems, words)
    }

    /// Connected components of a subset of the Coxeter diagram.
    fn diagram_components(&self, subset: &[usize]) -> Vec<Vec<usize>> {
        let mut comps: Vec<Vec<usize>> = Vec::new();
        let mut seen = vec![false; self.rank];
        for &start in subset {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut head = 0;
            while head < comp.len() {
                let a = comp[head];
                for &b in subset {
                    if !seen[b] && self.cartan[a][b] != 0 {
                        seen[b] = true;
                        comp.push(b);
                    }
                }
                head += 1;
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps.sort();
        comps
    }

    /// Matches a connected sub-diagram against the standard types by
    /// brute-force generator permutation.
    fn match_component(&self, comp: &[usize]) -> Result<LeviComponent> {
        let k = comp.len();
        let candidates: Vec<CartanType> = match k {
            1 => vec![CartanType::new(TypeFamily::A, 1)],
            2 => vec![
                CartanType::new(TypeFamily::A, 2),
                CartanType::new(TypeFamily::B, 2),
                CartanType::new(TypeFamily::G, 2),
            ],
            3 => vec![
                CartanType::new(TypeFamily::A, 3),
                CartanType::new(TypeFamily::B, 3),
            ],
            _ => vec![],
        };
        let mut all = Vec::new();
        permute(&mut (0..k).collect(), 0, &mut all);
        for ctype in candidates {
            let std_c = ctype.cartan_matrix();
            for p in &all {
                let ok = (0..k).all(|a| {
                    (0..k).all(|b| self.cartan[comp[p[a]]][comp[p[b]]] == std_c[a][b])
                });
                if ok {
                    return Ok(LeviComponent {
                        ctype,
                        letters: p.iter().map(|&a| comp[a]).collect(),
                    });
                }
            }
        }
        Err(Error::Invariant(format!(
            "parabolic component {:?} matches no standard type",
            comp
        )))
    }

    /// For a non-elliptic class, finds a minimal-length member that is
    /// elliptic in the standard parabolic generated by its support.
    pub fn levi_for_class(&self, class_idx: usize) -> Result<Option<LeviDatum>> {
        let cls = &self.classes[class_idx];
        if cls.elliptic {
            return Ok(None);
        }
        for &w in &cls.min_reps {
            let mut subset: Vec<usize> = self.elements[w].word.iter().map(|&s| s as usize).collect();
            subset.sort_unstable();
            subset.dedup();
            // Elliptic in W_J forces |J| = rank - m(C).
            if subset.len() != self.rank - cls.m {
                continue;
            }
            let comps = self.diagram_components(&subset);
            let components: Result<Vec<LeviComponent>> =
                comps.iter().map(|c| self.match_component(c)).collect();
            let Ok(components) = components else { continue };
            let (elements, words) = self.subgroup_elements(&subset);
            let nu_l = words.iter().map(Vec::len).max().unwrap_or(0);
            return Ok(Some(LeviDatum {
                subset,
                witness: w,
                omega: self.nu - nu_l,
                elements,
                words,
                components,
            }));
        }
        Err(Error::Invariant(format!(
            "no standard Levi found for class {}",
            cls.label
        )))
    }

    /// Induces a class function given on parabolic subgroup elements up to
    /// the full group; returns one value per conjugacy class.
    pub fn induce_class_function(
        &self,
        sub_elements: &[usize],
        values: &dyn Fn(usize) -> QPoly,
    ) -> Vec<QPoly> {
        let in_sub: std::collections::HashSet<usize> = sub_elements.iter().copied().collect();
        let scale = rat_frac(1, sub_elements.len() as i64);
        self.classes
            .iter()
            .map(|cls| {
                let y = cls.rep;
                let mut acc = QPoly::zero();
                for z in 0..self.order() {
                    let c = self.conjugate(z, y);
                    if in_sub.contains(&c) {
                        acc = &acc + &values(c);
                    }
                }
                acc.scale(&scale)
            })
            .collect()
    }
}

fn permute(current: &mut Vec<usize>, at: usize, out: &mut Vec<Vec<usize>>) {
    if at == current.len() {
        out.push(current.clone());
        return;
    }
    for i in at..current.len() {
        current.swap(at, i);
        permute(current, at + 1, out);
        current.swap(at, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(name: &str) -> WeylGroup {
        WeylGroup::build(CartanType::parse(name).unwrap()).unwrap()
    }

    #[test]
    fn orders_and_positive_root_counts() {
        for (name, order, nu, classes) in [
            ("A1", 2, 1, 2),
            ("A2", 6, 3, 3),
            ("A3", 24, 6, 5),
            ("B2", 8, 4, 5),
            ("B3", 48, 9, 10),
            ("G2", 12, 6, 6),
        ] {
            let w = build(name);
            assert_eq!(w.order(), order, "{}", name);
            assert_eq!(w.nu, nu, "{}", name);
            assert_eq!(w.classes.len(), classes, "{}", name);
            assert!(w.poincare_check(), "{}", name);
        }
    }

    #[test]
    fn unknown_types_rejected() {
        assert!(CartanType::parse("Z9").is_err());
        assert!(CartanType::parse("A4").is_err());
        assert!(CartanType::parse("B1").is_err());
        assert!(CartanType::parse("").is_err());
        assert!(CartanType::parse("F4").is_ok());
        assert!(!CartanType::parse("F4").unwrap().is_supported());
    }

    #[test]
    fn a2_class_representatives() {
        let w = build("A2");
        let displays: Vec<&str> = w.classes.iter().map(|c| c.display.as_str()).collect();
        assert_eq!(displays, ["1", "s1", "c"]);
        let labels: Vec<&str> = w.classes.iter().map(|c| c.label.as_str()).collect();
        assert_eq!(labels, ["e", "s1", "s1*s2"]);
        assert_eq!(
            w.classes.iter().map(|c| c.size).collect::<Vec<_>>(),
            [1, 3, 2]
        );
    }

    #[test]
    fn b2_and_g2_class_displays() {
        let w = build("B2");
        let displays: Vec<&str> = w.classes.iter().map(|c| c.display.as_str()).collect();
        assert_eq!(displays, ["1", "s1", "s2", "c", "c^2"]);
        let g = build("G2");
        let displays: Vec<&str> = g.classes.iter().map(|c| c.display.as_str()).collect();
        assert_eq!(displays, ["1", "s1", "s2", "c", "c^2", "c^3"]);
        assert_eq!(
            g.classes.iter().map(|c| c.size).collect::<Vec<_>>(),
            [1, 3, 3, 2, 2, 1]
        );
    }

    #[test]
    fn a3_cycle_type_displays() {
        let w = build("A3");
        let mut displays: Vec<&str> = w.classes.iter().map(|c| c.display.as_str()).collect();
        displays.sort_unstable();
        assert_eq!(displays, ["[1111]", "[211]", "[22]", "[31]", "[4]"]);
        // Transpositions form the class of s1 with 6 members.
        let s1 = w.class_of(w.simple_reflection(0));
        assert_eq!(w.classes[s1].display, "[211]");
        assert_eq!(w.classes[s1].size, 6);
    }

    #[test]
    fn b3_signed_cycle_type_displays() {
        let w = build("B3");
        let mut got: Vec<(String, usize)> = w
            .classes
            .iter()
            .map(|c| (c.display.clone(), c.size))
            .collect();
        got.sort();
        let mut expected = vec![
            ("[111|]".to_string(), 1),
            ("[21|]".to_string(), 6),
            ("[3|]".to_string(), 8),
            ("[11|1]".to_string(), 3),
            ("[2|1]".to_string(), 6),
            ("[1|2]".to_string(), 6),
            ("[1|11]".to_string(), 3),
            ("[|3]".to_string(), 8),
            ("[|21]".to_string(), 6),
            ("[|111]".to_string(), 1),
        ];
        expected.sort();
        assert_eq!(got, expected);
    }

    #[test]
    fn reflection_charpolys() {
        let a2 = build("A2");
        let id = a2.identity_class();
        assert_eq!(a2.classes[id].charpoly, QPoly::from_ints(&[1, -2, 1]));
        let cox = a2.coxeter_class();
        assert_eq!(a2.classes[cox].charpoly, QPoly::from_ints(&[1, 1, 1]));
        let a1 = build("A1");
        let s = a1.class_of(a1.simple_reflection(0));
        assert_eq!(a1.classes[s].charpoly, QPoly::from_ints(&[1, 1]));
    }

    #[test]
    fn class_invariants_match_spec_examples() {
        let a1 = build("A1");
        let id = &a1.classes[a1.identity_class()];
        assert_eq!((id.m, id.elliptic, id.n_w), (1, false, 0));
        let s = &a1.classes[a1.class_of(a1.simple_reflection(0))];
        assert_eq!((s.m, s.elliptic, s.n_w), (0, true, 2));
        let g2 = build("G2");
        let cox = &g2.classes[g2.coxeter_class()];
        assert!(cox.elliptic);
        assert_eq!(cox.m, 0);
        // n_w equals the charpoly evaluated at 1 for every class.
        for w in [&a1, &g2] {
            for cls in &w.classes {
                assert_eq!(
                    crate::exactalg::rat(cls.n_w),
                    cls.charpoly.eval(&crate::exactalg::rat(1))
                );
            }
        }
    }

    #[test]
    fn min_reps_have_equal_length() {
        for name in ["A1", "A2", "A3", "B2", "B3", "G2"] {
            let w = build(name);
            for cls in &w.classes {
                assert!(cls
                    .min_reps
                    .iter()
                    .all(|&x| w.length(x) == cls.min_length));
                assert_eq!(w.length(cls.rep), cls.min_length);
                assert!(cls.min_reps.contains(&cls.rep));
            }
        }
    }

    #[test]
    fn multiplication_and_inverse_are_consistent() {
        let w = build("B2");
        for a in 0..w.order() {
            assert_eq!(w.mult(a, w.inverse(a)), 0);
            assert_eq!(w.mult(w.inverse(a), a), 0);
            for b in 0..w.order() {
                let ab = w.mult(a, b);
                let word: Vec<u8> = w
                    .element(a)
                    .word
                    .iter()
                    .chain(w.element(b).word.iter())
                    .copied()
                    .collect();
                assert_eq!(w.element_of_word(&word), ab);
            }
        }
    }

    #[test]
    fn levi_for_simple_reflection_class() {
        let w = build("A2");
        let c = w.class_of(w.simple_reflection(0));
        let levi = w.levi_for_class(c).unwrap().unwrap();
        assert_eq!(levi.subset, vec![0]);
        assert_eq!(levi.components.len(), 1);
        assert_eq!(levi.components[0].ctype.name(), "A1");
        assert_eq!(levi.omega, 2);
        // Coxeter class is elliptic: no Levi.
        assert!(w.levi_for_class(w.coxeter_class()).unwrap().is_none());
        // Identity class: empty parabolic.
        let id = w.levi_for_class(w.identity_class()).unwrap().unwrap();
        assert!(id.subset.is_empty());
        assert_eq!(id.elements, vec![0]);
        assert_eq!(id.omega, 3);
    }

    #[test]
    fn levi_exists_for_all_nonelliptic_classes() {
        for name in ["A1", "A2", "A3", "B2", "B3", "G2"] {
            let w = build(name);
            for (i, cls) in w.classes.iter().enumerate() {
                let levi = w.levi_for_class(i).unwrap();
                assert_eq!(levi.is_none(), cls.elliptic, "{} {}", name, cls.label);
                if let Some(levi) = levi {
                    assert_eq!(levi.subset.len(), w.rank - cls.m);
                    let sum: usize = levi
                        .components
                        .iter()
                        .map(|c| c.ctype.rank)
                        .sum();
                    assert_eq!(sum, levi.subset.len());
                }
            }
        }
    }

    #[test]
    fn induced_trivial_character_is_permutation_character() {
        let w = build("A2");
        let (elems, _) = w.subgroup_elements(&[0]);
        assert_eq!(elems.len(), 2);
        let values = |_x: usize| QPoly::one();
        let ind = w.induce_class_function(&elems, &values);
        let expected: Vec<QPoly> = [3, 1, 0].iter().map(|&v| QPoly::from_ints(&[v])).collect();
        assert_eq!(ind, expected);
    }

    #[test]
    fn f4_builds_as_a_group() {
        let w = build("F4");
        assert_eq!(w.order(), 1152);
        assert_eq!(w.nu, 24);
        assert_eq!(w.classes.len(), 25);
        assert!(w.poincare_check());
    }
}

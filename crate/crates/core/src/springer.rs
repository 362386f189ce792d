//! Unipotent class data: each class carries a dimension invariant d and a
//! distinguished irreducible e0, and a total map xi sends every
//! irreducible to a class. Type A tables are generated from partitions;
//! the other types load validated data files. `theta` picks the unique
//! class supported by a set of appearing irreducibles.

use crate::coxeter::{TypeFamily, WeylGroup};
use crate::data::DataFile;
use crate::error::{Error, Result};
use crate::hecke::{partition_name, partitions};
use crate::wchars::CharTable;

pub struct UnipotentClass {
    pub label: String,
    pub d: usize,
    pub e0: usize,
}

pub struct SpringerTable {
    pub classes: Vec<UnipotentClass>,
    /// xi[irrep] = index into `classes`.
    pub xi: Vec<usize>,
}

impl SpringerTable {
    pub fn class_index(&self, label: &str) -> Option<usize> {
        self.classes.iter().position(|c| c.label == label)
    }
}

/// Builds the table for `w`, returning the data file it was read from
/// when one exists.
pub fn springer_table(
    w: &WeylGroup,
    table: &CharTable,
) -> Result<(SpringerTable, Option<DataFile>)> {
    match w.ctype.family {
        TypeFamily::A => {
            let st = type_a_table(w.rank, table)?;
            validate(&st, table, w.nu)?;
            Ok((st, None))
        }
        TypeFamily::B | TypeFamily::G if w.ctype.is_supported() => {
            let file = crate::data::springer_file(&w.ctype.name())?;
            let st = parse_springer(&file.body, table)?;
            validate(&st, table, w.nu)?;
            Ok((st, Some(file)))
        }
        _ => Err(Error::Unsupported(format!(
            "no unipotent class data for type {}",
            w.ctype.name()
        ))),
    }
}

/// In type A both sides are indexed by partitions: the class labeled by a
/// partition has d equal to its partition moment and e0 the character of
/// the same partition.
fn type_a_table(rank: usize, table: &CharTable) -> Result<SpringerTable> {
    let n = rank + 1;
    let mut entries: Vec<(usize, String, usize)> = Vec::new();
    for lam in partitions(n) {
        let d: usize = lam.iter().enumerate().map(|(i, part)| i * part).sum();
        let e0 = a_irrep_for_partition(table, &lam, n)?;
        entries.push((d, partition_name(&lam), e0));
    }
    entries.sort_by(|a, b| a.0.cmp(&b.0));
    if entries.windows(2).any(|p| p[0].0 == p[1].0) {
        return Err(Error::Invariant("duplicate dimension invariant in type A".into()));
    }
    let mut xi = vec![usize::MAX; table.len()];
    let classes: Vec<UnipotentClass> = entries
        .into_iter()
        .map(|(d, label, e0)| UnipotentClass { label, d, e0 })
        .collect();
    for (gi, cls) in classes.iter().enumerate() {
        xi[cls.e0] = gi;
    }
    if xi.iter().any(|&x| x == usize::MAX) {
        return Err(Error::Invariant("type A correspondence is not total".into()));
    }
    Ok(SpringerTable { classes, xi })
}

fn a_irrep_for_partition(table: &CharTable, lam: &[usize], n: usize) -> Result<usize> {
    if let Some(i) = table.irrep_index(&partition_name(lam)) {
        return Ok(i);
    }
    if lam.len() == 1 {
        return Ok(table.trivial);
    }
    if lam.iter().all(|&p| p == 1) {
        return Ok(table.sign);
    }
    if n == 3 && lam == [2, 1] {
        return Ok(table.reflection);
    }
    Err(Error::Invariant(format!(
        "no character named for partition {}",
        partition_name(lam)
    )))
}

fn parse_springer(body: &str, table: &CharTable) -> Result<SpringerTable> {
    let mut classes: Vec<UnipotentClass> = Vec::new();
    let mut extra: Vec<(usize, String)> = Vec::new();
    for raw_line in body.lines() {
        let line = raw_line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("[class ") {
            let (label, tail) = rest
                .split_once("] d =")
                .ok_or_else(|| Error::Data(format!("malformed class line '{}'", line)))?;
            let (dstr, e0part) = tail
                .split_once(';')
                .ok_or_else(|| Error::Data(format!("malformed class line '{}'", line)))?;
            let d: usize = dstr
                .trim()
                .parse()
                .map_err(|_| Error::Data(format!("bad dimension in '{}'", line)))?;
            let e0name = e0part
                .trim()
                .strip_prefix("e0 =")
                .map(str::trim)
                .ok_or_else(|| Error::Data(format!("missing e0 in '{}'", line)))?;
            let e0 = table
                .irrep_index(e0name)
                .ok_or_else(|| Error::Data(format!("unknown irreducible '{}'", e0name)))?;
            classes.push(UnipotentClass { label: label.to_string(), d, e0 });
        } else if let Some(rest) = line.strip_prefix("xi ") {
            let (name, label) = rest
                .split_once('=')
                .ok_or_else(|| Error::Data(format!("malformed xi line '{}'", line)))?;
            let irrep = table
                .irrep_index(name.trim())
                .ok_or_else(|| Error::Data(format!("unknown irreducible '{}'", name.trim())))?;
            extra.push((irrep, label.trim().to_string()));
        } else {
            return Err(Error::Data(format!("unrecognized line '{}'", line)));
        }
    }
    let mut xi = vec![usize::MAX; table.len()];
    for (gi, cls) in classes.iter().enumerate() {
        if xi[cls.e0] != usize::MAX {
            return Err(Error::Data(format!(
                "irreducible '{}' is distinguished twice",
                table.names[cls.e0]
            )));
        }
        xi[cls.e0] = gi;
    }
    for (irrep, label) in extra {
        let gi = classes
            .iter()
            .position(|c| c.label == label)
            .ok_or_else(|| Error::Data(format!("xi references unknown class '{}'", label)))?;
        if xi[irrep] != usize::MAX {
            return Err(Error::Data(format!(
                "duplicate xi assignment for '{}'",
                table.names[irrep]
            )));
        }
        xi[irrep] = gi;
    }
    if let Some(miss) = xi.iter().position(|&x| x == usize::MAX) {
        return Err(Error::Data(format!(
            "no class assigned to irreducible '{}'",
            table.names[miss]
        )));
    }
    Ok(SpringerTable { classes, xi })
}

/// Structural invariants: distinct labels, consistency of xi with the
/// distinguished characters, surjectivity, and unique extremes d = 0 and
/// d = nu (the number of positive roots).
pub fn validate(st: &SpringerTable, table: &CharTable, nu: usize) -> Result<()> {
    let mut labels: Vec<&str> = st.classes.iter().map(|c| c.label.as_str()).collect();
    labels.sort_unstable();
    labels.dedup();
    if labels.len() != st.classes.len() {
        return Err(Error::Invariant("duplicate unipotent class labels".into()));
    }
    if st.xi.len() != table.len() {
        return Err(Error::Invariant("xi is not defined on every irreducible".into()));
    }
    for (gi, cls) in st.classes.iter().enumerate() {
        if st.xi[cls.e0] != gi {
            return Err(Error::Invariant(format!(
                "distinguished character of class {} maps elsewhere",
                cls.label
            )));
        }
    }
    let mut hit = vec![false; st.classes.len()];
    for &gi in &st.xi {
        hit[gi] = true;
    }
    if !hit.iter().all(|&h| h) {
        return Err(Error::Invariant("some unipotent class receives no irreducible".into()));
    }
    let zeros = st.classes.iter().filter(|c| c.d == 0).count();
    let tops = st.classes.iter().filter(|c| c.d == nu).count();
    if zeros != 1 || tops != 1 {
        return Err(Error::Invariant(
            "extreme dimension invariants are not uniquely attained".into(),
        ));
    }
    Ok(())
}

/// The class supported by a set of appearing irreducibles: its e0 appears,
/// every appearing irreducible sits at depth at most d, and strictly less
/// unless xi already sends it there. Exactly one candidate must survive.
pub fn theta(st: &SpringerTable, appearing: &[bool]) -> Result<usize> {
    let mut candidates = Vec::new();
    for (gi, cls) in st.classes.iter().enumerate() {
        if !appearing[cls.e0] {
            continue;
        }
        let ok = appearing.iter().enumerate().all(|(e, &app)| {
            if !app {
                return true;
            }
            let dp = st.classes[st.xi[e]].d;
            dp <= cls.d && (st.xi[e] == gi || dp < cls.d)
        });
        if ok {
            candidates.push(gi);
        }
    }
    match candidates.as_slice() {
        [one] => Ok(*one),
        [] => Err(Error::ThetaNoCandidate(
            "no unipotent class supports the appearing irreducibles".into(),
        )),
        [a, b, ..] => Err(Error::ThetaAmbiguous(
            st.classes[*a].label.clone(),
            st.classes[*b].label.clone(),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::CartanType;
    use crate::wchars::char_table;

    fn setup(name: &str) -> (WeylGroup, CharTable, SpringerTable) {
        let w = WeylGroup::build(CartanType::parse(name).unwrap()).unwrap();
        let t = char_table(&w).unwrap();
        let (st, _) = springer_table(&w, &t).unwrap();
        (w, t, st)
    }

    fn appearing(t: &CharTable, names: &[&str]) -> Vec<bool> {
        let mut v = vec![false; t.len()];
        for n in names {
            v[t.irrep_index(n).unwrap()] = true;
        }
        v
    }

    #[test]
    fn a2_programmatic_table() {
        let (_, t, st) = setup("A2");
        let ds: Vec<usize> = st.classes.iter().map(|c| c.d).collect();
        assert_eq!(ds, [0, 1, 3]);
        let labels: Vec<&str> = st.classes.iter().map(|c| c.label.as_str()).collect();
        assert_eq!(labels, ["[3]", "[21]", "[111]"]);
        assert_eq!(st.classes[0].e0, t.trivial);
        assert_eq!(st.classes[1].e0, t.reflection);
        assert_eq!(st.classes[2].e0, t.sign);
    }

    #[test]
    fn a3_programmatic_table() {
        let (_, t, st) = setup("A3");
        let ds: Vec<usize> = st.classes.iter().map(|c| c.d).collect();
        assert_eq!(ds, [0, 1, 2, 3, 6]);
        assert_eq!(st.classes[2].label, "[22]");
        assert_eq!(st.xi[t.irrep_index("[22]").unwrap()], 2);
    }

    #[test]
    fn b2_loaded_table() {
        let (_, t, st) = setup("B2");
        assert_eq!(st.classes.len(), 4);
        let ds: Vec<usize> = st.classes.iter().map(|c| c.d).collect();
        assert_eq!(ds, [0, 1, 2, 4]);
        assert_eq!(st.xi[t.irrep_index("eps2").unwrap()], st.class_index("[311]").unwrap());
        assert_eq!(st.xi[t.irrep_index("eps1").unwrap()], st.class_index("[221]").unwrap());
    }

    #[test]
    fn g2_loaded_table() {
        let (_, t, st) = setup("G2");
        let labels: Vec<&str> = st.classes.iter().map(|c| c.label.as_str()).collect();
        assert_eq!(labels, ["G2", "G2(a1)", "A1~", "A1", "1"]);
        assert_eq!(st.xi[t.irrep_index("eps2").unwrap()], st.class_index("G2(a1)").unwrap());
        assert_eq!(st.xi[t.irrep_index("rho'").unwrap()], st.class_index("A1~").unwrap());
    }

    #[test]
    fn theta_on_b2_supports() {
        let (_, t, st) = setup("B2");
        let pick = |names: &[&str]| {
            let gi = theta(&st, &appearing(&t, names)).unwrap();
            st.classes[gi].label.clone()
        };
        assert_eq!(pick(&["1"]), "[5]");
        assert_eq!(pick(&["1", "rho"]), "[311]");
        assert_eq!(pick(&["1", "rho", "eps1"]), "[221]");
        assert_eq!(pick(&["1", "rho", "eps2"]), "[311]");
        assert_eq!(pick(&["1", "eps1", "eps2", "sgn", "rho"]), "[11111]");
    }

    #[test]
    fn theta_on_g2_supports() {
        let (_, t, st) = setup("G2");
        let pick = |names: &[&str]| {
            let gi = theta(&st, &appearing(&t, names)).unwrap();
            st.classes[gi].label.clone()
        };
        assert_eq!(pick(&["1"]), "G2");
        assert_eq!(pick(&["1", "rho"]), "G2(a1)");
        assert_eq!(pick(&["1", "rho", "rho'"]), "A1~");
        assert_eq!(pick(&["1", "rho", "rho'", "eps1"]), "A1");
        assert_eq!(pick(&["1", "rho", "rho'", "eps2"]), "A1~");
        assert_eq!(pick(&["1", "eps1", "eps2", "sgn", "rho", "rho'"]), "1");
    }

    #[test]
    fn theta_error_cases() {
        let (_, t, st) = setup("B2");
        let nothing = theta(&st, &appearing(&t, &["eps2"]));
        assert!(matches!(nothing, Err(Error::ThetaNoCandidate(_))));
        // A deliberately inconsistent table makes two classes eligible.
        let broken = SpringerTable {
            classes: vec![
                UnipotentClass { label: "u".into(), d: 1, e0: 0 },
                UnipotentClass { label: "v".into(), d: 2, e0: 1 },
            ],
            xi: vec![0, 0],
        };
        let out = theta(&broken, &[true, true]);
        assert!(matches!(out, Err(Error::ThetaAmbiguous(_, _))));
    }

    #[test]
    fn validation_rejects_broken_tables() {
        let (w, t, st) = setup("B2");
        assert!(validate(&st, &t, w.nu).is_ok());
        let mut bad_xi = SpringerTable {
            classes: st
                .classes
                .iter()
                .map(|c| UnipotentClass { label: c.label.clone(), d: c.d, e0: c.e0 })
                .collect(),
            xi: st.xi.clone(),
        };
        bad_xi.xi[t.irrep_index("rho").unwrap()] = st.class_index("[221]").unwrap();
        assert!(validate(&bad_xi, &t, w.nu).is_err());
    }

    #[test]
    fn unsupported_type_is_refused() {
        let w = WeylGroup::build(CartanType::parse("F4").unwrap()).unwrap();
        let t_err = springer_table(&w, &char_table_stub());
        assert!(matches!(t_err, Err(Error::Unsupported(_))));
    }

    fn char_table_stub() -> CharTable {
        CharTable {
            names: vec!["1".into()],
            degrees: vec![1],
            values: vec![vec![1]],
            class_sizes: vec![1],
            trivial: 0,
            sign: 0,
            reflection: 0,
        }
    }
}

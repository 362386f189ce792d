//! Rendering, machine-readable documents, and verification driving shared
//! by the command-line binary and its tests.

use serde::{Deserialize, Serialize};

use weylpsi_core::coxeter::CartanType;
use weylpsi_core::error::{Error, Result};
use weylpsi_core::exactalg::rat;
use weylpsi_core::families::{self, Gamma};
use weylpsi_core::psi::{golden_mismatches, golden_table, palindromic, PsiContext, PsiValue};

/// Machine-readable output: the full table for one Cartan type.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputDocument {
    /// Cartan type name.
    pub r#type: String,
    /// Tool version that produced the document.
    pub version: String,
    /// Irreducible character names; every `psi` vector aligns with this.
    pub characters: Vec<String>,
    /// Curated data files consumed, with their sha256 checksums.
    pub checksums: Vec<ChecksumEntry>,
    pub classes: Vec<ClassRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChecksumEntry {
    pub file: String,
    pub sha256: String,
}

/// One conjugacy class with its computed value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRecord {
    /// Display label (`c^2`, `[21|]`, ...).
    pub label: String,
    /// Canonical minimal-length word as 1-based generator letters.
    pub word: Vec<usize>,
    pub length: usize,
    /// Fixed-space dimension on the reflection representation.
    pub m: usize,
    pub elliptic: bool,
    /// Integer coefficients, lowest degree first, aligned with the
    /// document's `characters`; an empty list is the zero polynomial.
    pub psi: Vec<Vec<i64>>,
    /// Label of the assigned unipotent class.
    pub theta: String,
}

/// Builds the document for one type; deterministic field ordering.
pub fn build_document(ctx: &PsiContext, version: &str) -> Result<OutputDocument> {
    let mut classes = Vec::new();
    for value in ctx.psi_all()? {
        let cls = &ctx.group.classes[value.class_idx];
        let word = ctx
            .group
            .element(cls.rep)
            .word
            .iter()
            .map(|&s| s as usize + 1)
            .collect();
        let mut psi = Vec::new();
        for p in &value.coeffs {
            let row: std::result::Result<Vec<i64>, _> = p
                .int_coeffs()?
                .iter()
                .map(|c| c.to_string().parse::<i64>())
                .collect();
            psi.push(row.map_err(|_| Error::Invariant("coefficient exceeds i64".into()))?);
        }
        let theta = ctx.springer.classes[ctx.theta_of(&value)?].label.clone();
        classes.push(ClassRecord {
            label: cls.display.clone(),
            word,
            length: cls.min_length,
            m: cls.m,
            elliptic: cls.elliptic,
            psi,
            theta,
        });
    }
    Ok(OutputDocument {
        r#type: ctx.ctype.name(),
        version: version.to_string(),
        characters: ctx.table.names.clone(),
        checksums: ctx
            .checksums
            .iter()
            .map(|(f, s)| ChecksumEntry {
                file: f.clone(),
                sha256: s.clone(),
            })
            .collect(),
        classes,
    })
}

/// Renders one value as graded pieces in descending degree, e.g.
/// `q^2*1 + q*rho + 1` or `q^2*(rho' + 1)`.
pub fn render_value(ctx: &PsiContext, value: &PsiValue) -> String {
    let Some(top) = value.coeffs.iter().filter_map(|p| p.degree()).max() else {
        return "0".to_string();
    };
    let mut pieces = Vec::new();
    for i in (0..=top).rev() {
        let mut terms = Vec::new();
        for (e, p) in value.coeffs.iter().enumerate() {
            let c = p.coeff(i);
            if c != rat(0) {
                let name = &ctx.table.names[e];
                terms.push(if c == rat(1) {
                    name.clone()
                } else {
                    format!("{c}*{name}")
                });
            }
        }
        if terms.is_empty() {
            continue;
        }
        let body = terms.join(" + ");
        pieces.push(match (i, terms.len()) {
            (0, _) => body,
            (1, 1) => format!("q*{body}"),
            (1, _) => format!("q*({body})"),
            (_, 1) => format!("q^{i}*{body}"),
            (_, _) => format!("q^{i}*({body})"),
        });
    }
    pieces.join(" + ")
}

/// Full text listing for one type: a value line and an assignment line per
/// conjugacy class, in class order.
pub fn render_text(ctx: &PsiContext) -> Result<String> {
    let mut out = String::new();
    for value in ctx.psi_all()? {
        let cls = &ctx.group.classes[value.class_idx];
        let theta = &ctx.springer.classes[ctx.theta_of(&value)?].label;
        out.push_str(&format!(
            "Psi({}) = {}\n",
            cls.display,
            render_value(ctx, &value)
        ));
        out.push_str(&format!("Theta({}) = {}\n", cls.display, theta));
    }
    Ok(out)
}

/// Which of the three factor matrices to print.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum WhichMatrix {
    Left,
    Middle,
    Right,
}

/// Prints the chosen factor with row and column labels.
pub fn render_matrix(ctx: &PsiContext, which: WhichMatrix) -> String {
    let chars = ctx.table.names.join(", ");
    let mut out = String::new();
    match which {
        WhichMatrix::Left => {
            out.push_str(&format!(
                "A for {} (rows: classes; columns: characters {})\n",
                ctx.ctype.name(),
                chars
            ));
            for (c, row) in ctx.a_matrix().iter().enumerate() {
                let entries: Vec<String> = row.iter().map(|p| p.to_string()).collect();
                out.push_str(&format!(
                    "{}: [{}]\n",
                    ctx.group.classes[c].display,
                    entries.join(", ")
                ));
            }
        }
        WhichMatrix::Middle => {
            out.push_str(&format!(
                "A' for {} (rows and columns: characters {})\n",
                ctx.ctype.name(),
                chars
            ));
            for (e, row) in ctx.a_prime.iter().enumerate() {
                let entries: Vec<String> = row.iter().map(|x| x.to_string()).collect();
                out.push_str(&format!(
                    "{}: [{}]\n",
                    ctx.table.names[e],
                    entries.join(", ")
                ));
            }
        }
        WhichMatrix::Right => {
            out.push_str(&format!(
                "A'' for {} (rows and columns: characters {})\n",
                ctx.ctype.name(),
                chars
            ));
            let a = ctx.a_doubleprime();
            for e in 0..ctx.table.len() {
                let entries: Vec<String> =
                    (0..ctx.table.len()).map(|j| a[(e, j)].to_string()).collect();
                out.push_str(&format!(
                    "{}: [{}]\n",
                    ctx.table.names[e],
                    entries.join(", ")
                ));
            }
        }
    }
    out
}

/// Verification suites runnable from the command line.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Suite {
    Golden,
    Invariants,
    All,
}

/// Runs the chosen suites for one type, printing one line per check into
/// `out`; returns whether every hard check passed.
pub fn verify_type(name: &str, suite: Suite, out: &mut String) -> Result<bool> {
    let ctype = CartanType::parse(name)?;
    let ctx = PsiContext::new(ctype)?;
    let mut ok = true;
    let mut line = |s: String| out.push_str(&(s + "\n"));
    if matches!(suite, Suite::Golden | Suite::All) {
        match golden_mismatches(&ctx)? {
            None => line(format!("{name} golden: no reference table for this type")),
            Some(bad) if bad.is_empty() => {
                let n = golden_table(ctype).map_or(0, <[_]>::len);
                line(format!("{name} golden: PASS ({n} class comparisons)"));
            }
            Some(bad) => {
                ok = false;
                for b in &bad {
                    line(format!("{name} golden: FAIL ({b})"));
                }
            }
        }
    }
    if matches!(suite, Suite::Invariants | Suite::All) {
        // Integrality, the even degree bound, and the top coefficient are
        // asserted during evaluation, so computing all values checks them.
        let values = match ctx.psi_all() {
            Ok(v) => {
                line(format!(
                    "{name} values: PASS ({} classes, integral with degree bounds)",
                    v.len()
                ));
                v
            }
            Err(e) => {
                line(format!("{name} values: FAIL ({e})"));
                ok = false;
                Vec::new()
            }
        };
        let mut bad = Vec::new();
        for c in 0..ctx.group.classes.len() {
            if let Err(e) = ctx.min_rep_independent(c) {
                bad.push(e.to_string());
            }
        }
        if bad.is_empty() {
            line(format!("{name} representatives: PASS (independent of choice)"));
        } else {
            ok = false;
            for b in &bad {
                line(format!("{name} representatives: FAIL ({b})"));
            }
        }
        let mut bad = Vec::new();
        let mut checked = 0usize;
        for (c, cls) in ctx.group.classes.iter().enumerate() {
            if cls.elliptic {
                continue;
            }
            checked += 1;
            match ctx.induction_check(c) {
                Ok(true) => {}
                Ok(false) => bad.push(format!("class {} differs from induction", cls.label)),
                Err(e) => bad.push(e.to_string()),
            }
        }
        if bad.is_empty() {
            line(format!(
                "{name} induction: PASS ({checked} non-elliptic classes)"
            ));
        } else {
            ok = false;
            for b in &bad {
                line(format!("{name} induction: FAIL ({b})"));
            }
        }
        let mut bad = Vec::new();
        let mut hit = vec![false; ctx.springer.classes.len()];
        for value in &values {
            match ctx.theta_of(value) {
                Ok(t) => {
                    hit[t] = true;
                    let d = ctx.springer.classes[t].d;
                    if value.class_idx == ctx.group.identity_class() && d != ctx.group.nu {
                        bad.push("identity class not sent to the trivial class".into());
                    }
                    if value.class_idx == ctx.group.coxeter_class() && d != 0 {
                        bad.push("Coxeter class not sent to the regular class".into());
                    }
                }
                Err(e) => bad.push(e.to_string()),
            }
        }
        if !hit.iter().all(|&h| h) {
            bad.push("assignment is not surjective".into());
        }
        if bad.is_empty() {
            line(format!(
                "{name} unipotent assignment: PASS (total, surjective, endpoints)"
            ));
        } else {
            ok = false;
            for b in &bad {
                line(format!("{name} unipotent assignment: FAIL ({b})"));
            }
        }
        let mut gammas: Vec<Gamma> = Vec::new();
        for f in &ctx.families {
            if !gammas.contains(&f.gamma) {
                gammas.push(f.gamma);
            }
        }
        for g in gammas {
            match families::fourier_matrix(g) {
                Ok(fd) => line(format!(
                    "{name} fourier {}: PASS (symmetric involution on {} slots)",
                    g.name(),
                    fd.labels.len()
                )),
                Err(e) => {
                    ok = false;
                    line(format!("{name} fourier {}: FAIL ({e})", g.name()));
                }
            }
        }
        match families::a_prime_invertible(&ctx.a_prime) {
            Ok((true, det)) => line(format!("{name} middle factor: invertible (det = {det})")),
            Ok((false, _)) => line(format!("{name} middle factor: singular (reported)")),
            Err(e) => {
                ok = false;
                line(format!("{name} middle factor: FAIL ({e})"));
            }
        }
        let not_pal: Vec<&str> = values
            .iter()
            .filter(|v| !palindromic(v))
            .map(|v| ctx.group.classes[v.class_idx].display.as_str())
            .collect();
        if not_pal.is_empty() {
            line(format!(
                "{name} palindromy: {}/{} classes palindromic (report only)",
                values.len(),
                values.len()
            ));
        } else {
            line(format!(
                "{name} palindromy: {}/{} classes palindromic, exceptions {:?} (report only)",
                values.len() - not_pal.len(),
                values.len(),
                not_pal
            ));
        }
    }
    Ok(ok)
}

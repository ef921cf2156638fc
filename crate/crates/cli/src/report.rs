//! Output records. Each serializes to the `--json` schema and reads back
//! unchanged; the `Display` impls give the plain-text form.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub field: String,
    pub tag: String,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub dual_d: usize,
    /// Points summing to `-1/eta`, when the twisted rule found some.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
}

impl fmt::Display for Classification {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(out, "{} [{},{},{}] over {}", self.tag, self.n, self.k, self.d, self.field)?;
        write!(out, "dual distance: {}", self.dual_d)?;
        if let Some(w) = &self.witness {
            write!(out, "\nsubset summing to -1/eta: {{{}}}", w.join(", "))?;
        }
        Ok(())
    }
}

#[derive(Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matrices {
    pub generator: Vec<Vec<String>>,
    pub parity_check: Vec<Vec<String>>,
}

fn write_matrix(out: &mut fmt::Formatter<'_>, rows: &[Vec<String>]) -> fmt::Result {
    let width = rows.iter().flatten().map(String::len).max().unwrap_or(1);
    for r in rows {
        let cells: Vec<String> = r.iter().map(|c| format!("{c:>width$}")).collect();
        writeln!(out, "  [ {} ]", cells.join(" "))?;
    }
    Ok(())
}

impl fmt::Display for Matrices {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(out, "G =")?;
        write_matrix(out, &self.generator)?;
        writeln!(out, "H =")?;
        write_matrix(out, &self.parity_check)
    }
}

#[derive(Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecodeReport {
    pub outcome: String,
    pub t: usize,
    pub syndrome: Vec<String>,
    pub kernel_basis: Vec<Vec<String>>,
    pub u_prime: Vec<String>,
    pub locator: Vec<String>,
    /// Error-locating positions, counted from 1.
    pub zero_set: Vec<usize>,
    pub error: Vec<String>,
    pub codeword: Vec<String>,
}

impl fmt::Display for DecodeReport {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(out, "outcome:  {}", self.outcome)?;
        writeln!(out, "t:        {}", self.t)?;
        writeln!(out, "syndrome: ({})", self.syndrome.join(", "))?;
        for u in &self.kernel_basis {
            writeln!(out, "kernel:   ({})", u.join(", "))?;
        }
        if !self.u_prime.is_empty() {
            writeln!(out, "u':       ({})", self.u_prime.join(", "))?;
            writeln!(out, "u'G_A:    ({})", self.locator.join(", "))?;
            let z: Vec<String> = self.zero_set.iter().map(usize::to_string).collect();
            writeln!(out, "Z:        {{{}}}", z.join(", "))?;
        }
        if !self.error.is_empty() {
            writeln!(out, "error:    ({})", self.error.join(", "))?;
        }
        if !self.codeword.is_empty() {
            writeln!(out, "codeword: ({})", self.codeword.join(", "))?;
        }
        Ok(())
    }
}

#[derive(Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EcpBuild {
    pub t: usize,
    pub parity: String,
    pub dim_a: usize,
    pub dim_b: usize,
    pub generator_a: Vec<Vec<String>>,
    pub generator_b: Vec<Vec<String>>,
}

impl fmt::Display for EcpBuild {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(out, "t = {} (n - k {})", self.t, self.parity)?;
        writeln!(out, "G_A ({} rows) =", self.dim_a)?;
        write_matrix(out, &self.generator_a)?;
        writeln!(out, "G_B ({} rows) =", self.dim_b)?;
        write_matrix(out, &self.generator_b)
    }
}

#[derive(Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EcpVerify {
    pub t: usize,
    pub product_in_dual: bool,
    pub dual_distance_of_b: bool,
    pub dimension_of_a: bool,
    pub distance_sum: bool,
    pub all: bool,
}

impl fmt::Display for EcpVerify {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = |b: bool| if b { "yes" } else { "NO" };
        writeln!(out, "t = {}", self.t)?;
        writeln!(out, "A*B in dual of C: {}", mark(self.product_in_dual))?;
        writeln!(out, "d(B^perp) > t:    {}", mark(self.dual_distance_of_b))?;
        writeln!(out, "dim A > t:        {}", mark(self.dimension_of_a))?;
        write!(out, "d(A) + d(C) > n:  {}", mark(self.distance_sum))
    }
}

#[derive(Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchurReport {
    /// `"code"` or `"dual"`.
    pub of: String,
    pub n: usize,
    pub k: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub distance: Option<usize>,
}

impl fmt::Display for SchurReport {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(out, "square of the {} [{},{}]", self.of, self.n, self.k)?;
        if let Some(d) = self.dim {
            write!(out, "\ndim: {d}")?;
        }
        if let Some(d) = self.distance {
            write!(out, "\nminimum distance: {d}")?;
        }
        Ok(())
    }
}

#[derive(Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessReport {
    pub perm: Vec<usize>,
    pub scales: Vec<String>,
}

#[derive(Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivSearch {
    pub verdict: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub square_dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub square_dim_grs: Option<usize>,
    /// 1-based coordinate j with `e_j` in the square of the dual.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dual_square_unit: Option<usize>,
    pub candidates_tested: u128,
    pub equivalent_sets: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl fmt::Display for EquivSearch {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(out, "verdict: {}", self.verdict)?;
        if let (Some(d), Some(g)) = (self.square_dim, self.square_dim_grs) {
            write!(out, "\ndim(C^2) = {d} (GRS would give {g})")?;
        }
        if let Some(j) = self.dual_square_unit {
            write!(out, "\nunit vector e_{j} lies in (C^perp)^2")?;
        }
        write!(out, "\nGRS candidates tested: {}", self.candidates_tested)?;
        for s in &self.equivalent_sets {
            write!(out, "\nequivalent to GRS on {{{}}}", s.join(", "))?;
        }
        if let Some(note) = &self.note {
            write!(out, "\n{note}")?;
        }
        Ok(())
    }
}

#[derive(Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivPair {
    pub equivalent: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessReport>,
}

impl fmt::Display for EquivPair {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            Some(w) => {
                let perm: Vec<String> = w.perm.iter().map(|p| (p + 1).to_string()).collect();
                write!(
                    out,
                    "equivalent\npermutation: ({})\nscales: ({})",
                    perm.join(", "),
                    w.scales.join(", ")
                )
            }
            None => write!(out, "not equivalent"),
        }
    }
}

#[derive(Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HoleVector {
    pub class: u8,
    pub t: usize,
    pub s: String,
    pub u: Vec<String>,
}

impl fmt::Display for HoleVector {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            out,
            "class {} (t = {}, s = {})\nu = ({})",
            self.class,
            self.t,
            self.s,
            self.u.join(", ")
        )
    }
}

#[derive(Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RadiusReport {
    /// Which code was measured.
    pub code: String,
    pub radius: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vector: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub distance: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub is_deep_hole: Option<bool>,
    /// Sampled family members `a*u + c` checked, and how many were deep holes.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family_sampled: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family_deep: Option<usize>,
}

impl fmt::Display for RadiusReport {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(out, "code: {}\ncovering radius: {}", self.code, self.radius)?;
        if let Some(v) = &self.vector {
            write!(out, "\nvector: ({})", v.join(", "))?;
        }
        if let Some(d) = self.distance {
            write!(out, "\nerror distance: {d}")?;
        }
        if let Some(b) = self.is_deep_hole {
            write!(out, "\ndeep hole: {}", if b { "yes" } else { "no" })?;
        }
        if let (Some(s), Some(d)) = (self.family_sampled, self.family_deep) {
            write!(out, "\nsampled a*u + c: {d}/{s} deep holes")?;
        }
        Ok(())
    }
}

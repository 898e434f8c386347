//! Exact finite probability objects over the binary alphabet `{-1, +1}` and
//! the information measures built on them.
//!
//! Everything here is measured in bits (log base 2) and stored densely in
//! `f64`. Distributions are validated at construction: entries must be
//! nonnegative and sum to 1 within [`NORMALIZATION_EPS`]; sums off by up to
//! [`RENORMALIZATION_EPS`] are silently renormalized, anything worse is an
//! error.

use std::fmt;

use thiserror::Error;

/// Deviation from 1 accepted without touching the entries.
pub const NORMALIZATION_EPS: f64 = 1e-12;
/// Deviation from 1 up to which a distribution is silently renormalized.
pub const RENORMALIZATION_EPS: f64 = 1e-9;

#[derive(Debug, Error, PartialEq)]
pub enum ProbError {
    #[error("entry {index} is negative ({value})")]
    NegativeEntry { index: usize, value: f64 },
    #[error("entries sum to {sum}, more than {RENORMALIZATION_EPS} away from 1")]
    NotNormalized { sum: f64 },
    #[error("entry {index} is not finite")]
    NotFinite { index: usize },
    #[error("axes must be distinct")]
    OverlappingAxes,
    #[error("axis set must not be empty")]
    EmptyAxisSet,
}

/// One of the two values a binary variable can take.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub const ALL: [Sign; 2] = [Sign::Minus, Sign::Plus];

    /// Numeric value, -1.0 or +1.0.
    #[inline]
    pub fn value(self) -> f64 {
        match self {
            Sign::Minus => -1.0,
            Sign::Plus => 1.0,
        }
    }

    #[inline]
    pub fn index(self) -> usize {
        match self {
            Sign::Minus => 0,
            Sign::Plus => 1,
        }
    }

    #[inline]
    pub fn from_index(index: usize) -> Sign {
        if index == 0 {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    /// Parses the integer encoding -1 / +1.
    pub fn from_int(v: i64) -> Option<Sign> {
        match v {
            -1 => Some(Sign::Minus),
            1 => Some(Sign::Plus),
            _ => None,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Minus => write!(f, "-1"),
            Sign::Plus => write!(f, "+1"),
        }
    }
}

/// Axis of a [`Pmf3`]. By convention X is the prediction target and Y, Z are
/// the two sources.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axis3 {
    X,
    Y,
    Z,
}

impl Axis3 {
    pub const ALL: [Axis3; 3] = [Axis3::X, Axis3::Y, Axis3::Z];
}

fn validate_normalized<const N: usize>(mut cells: [f64; N]) -> Result<[f64; N], ProbError> {
    for (index, &value) in cells.iter().enumerate() {
        if !value.is_finite() {
            return Err(ProbError::NotFinite { index });
        }
        if value < 0.0 {
            return Err(ProbError::NegativeEntry { index, value });
        }
    }
    let sum: f64 = cells.iter().sum();
    let dev = (sum - 1.0).abs();
    if dev <= NORMALIZATION_EPS {
        Ok(cells)
    } else if dev <= RENORMALIZATION_EPS {
        for value in &mut cells {
            *value /= sum;
        }
        Ok(cells)
    } else {
        Err(ProbError::NotNormalized { sum })
    }
}

/// Distribution over `{-1, +1}`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BinaryDist {
    p: [f64; 2],
}

impl BinaryDist {
    pub fn new(p_minus: f64, p_plus: f64) -> Result<Self, ProbError> {
        Ok(BinaryDist {
            p: validate_normalized([p_minus, p_plus])?,
        })
    }

    pub fn uniform() -> Self {
        BinaryDist { p: [0.5, 0.5] }
    }

    pub fn point_mass(s: Sign) -> Self {
        let mut p = [0.0, 0.0];
        p[s.index()] = 1.0;
        BinaryDist { p }
    }

    #[inline]
    pub fn prob(&self, s: Sign) -> f64 {
        self.p[s.index()]
    }

    pub fn probs(&self) -> [f64; 2] {
        self.p
    }

    pub fn entropy(&self) -> f64 {
        dense::entropy_slice(&self.p)
    }
}

/// Conditional distribution over `{-1, +1}`, one normalized row per
/// conditioning value (arity 1) or pair of values (arity 2).
#[derive(Clone, Debug, PartialEq)]
pub struct BinaryKernel {
    arity: usize,
    rows: Vec<BinaryDist>,
}

impl BinaryKernel {
    /// Kernel conditioned on a single binary variable; rows indexed by the
    /// conditioning sign.
    pub fn from_rows1(rows: [BinaryDist; 2]) -> Self {
        BinaryKernel {
            arity: 1,
            rows: rows.to_vec(),
        }
    }

    /// Kernel conditioned on an ordered pair of binary variables.
    pub fn from_rows2(rows: [BinaryDist; 4]) -> Self {
        BinaryKernel {
            arity: 2,
            rows: rows.to_vec(),
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Row for a single conditioning value. Panics if the kernel has arity 2.
    #[inline]
    pub fn given1(&self, c: Sign) -> &BinaryDist {
        assert_eq!(self.arity, 1, "kernel conditions on a pair of values");
        &self.rows[c.index()]
    }

    /// Row for a pair of conditioning values. Panics if the kernel has arity 1.
    #[inline]
    pub fn given2(&self, c1: Sign, c2: Sign) -> &BinaryDist {
        assert_eq!(self.arity, 2, "kernel conditions on a single value");
        &self.rows[c1.index() * 2 + c2.index()]
    }
}

#[inline]
pub(crate) fn cell_index(x: Sign, y: Sign, z: Sign) -> usize {
    x.index() * 4 + y.index() * 2 + z.index()
}

/// Joint distribution over three binary variables (X, Y, Z), stored as a
/// dense table of 8 cells ordered x-major: index = 4·ix + 2·iy + iz with
/// Minus → 0, Plus → 1.
#[derive(Clone, Debug, PartialEq)]
pub struct Pmf3 {
    cells: [f64; 8],
}

impl Pmf3 {
    pub fn new(cells: [f64; 8]) -> Result<Self, ProbError> {
        Ok(Pmf3 {
            cells: validate_normalized(cells)?,
        })
    }

    pub fn from_fn(mut f: impl FnMut(Sign, Sign, Sign) -> f64) -> Result<Self, ProbError> {
        let mut cells = [0.0; 8];
        for x in Sign::ALL {
            for y in Sign::ALL {
                for z in Sign::ALL {
                    cells[cell_index(x, y, z)] = f(x, y, z);
                }
            }
        }
        Pmf3::new(cells)
    }

    pub fn uniform() -> Self {
        Pmf3 { cells: [0.125; 8] }
    }

    /// X = Y ⊕ Z with Y, Z uniform and independent (bit 0 ↦ -1, bit 1 ↦ +1):
    /// the canonical fully synergistic triple.
    pub fn xor_triple() -> Self {
        Pmf3::from_fn(|x, y, z| {
            if x.value() * y.value() * z.value() < 0.0 {
                0.25
            } else {
                0.0
            }
        })
        .expect("xor table is a valid pmf")
    }

    /// X = Y AND Z (X is +1 iff both Y and Z are +1) with Y, Z uniform and
    /// independent.
    pub fn and_triple() -> Self {
        Pmf3::from_fn(|x, y, z| {
            let and = if y == Sign::Plus && z == Sign::Plus {
                Sign::Plus
            } else {
                Sign::Minus
            };
            if x == and {
                0.25
            } else {
                0.0
            }
        })
        .expect("and table is a valid pmf")
    }

    #[inline]
    pub fn get(&self, x: Sign, y: Sign, z: Sign) -> f64 {
        self.cells[cell_index(x, y, z)]
    }

    #[inline]
    pub fn cells(&self) -> &[f64; 8] {
        &self.cells
    }

    /// Iterates cells in storage order together with their coordinates.
    pub fn iter(&self) -> impl Iterator<Item = ((Sign, Sign, Sign), f64)> + '_ {
        self.cells.iter().enumerate().map(|(i, &p)| {
            let x = Sign::from_index(i >> 2);
            let y = Sign::from_index((i >> 1) & 1);
            let z = Sign::from_index(i & 1);
            ((x, y, z), p)
        })
    }

    pub fn entropy(&self) -> f64 {
        dense::entropy_slice(&self.cells)
    }

    pub fn marginal_x(&self) -> BinaryDist {
        BinaryDist {
            p: dense::marg_x(&self.cells),
        }
    }

    pub fn marginal_y(&self) -> BinaryDist {
        BinaryDist {
            p: dense::marg_y(&self.cells),
        }
    }

    pub fn marginal_z(&self) -> BinaryDist {
        BinaryDist {
            p: dense::marg_z(&self.cells),
        }
    }

    pub fn marginal_xy(&self) -> Pmf2 {
        Pmf2 {
            cells: dense::marg_xy(&self.cells),
        }
    }

    pub fn marginal_xz(&self) -> Pmf2 {
        Pmf2 {
            cells: dense::marg_xz(&self.cells),
        }
    }

    pub fn marginal_yz(&self) -> Pmf2 {
        Pmf2 {
            cells: dense::marg_yz(&self.cells),
        }
    }
}

/// Joint distribution over two binary variables, 4 dense cells ordered
/// first-axis-major.
#[derive(Clone, Debug, PartialEq)]
pub struct Pmf2 {
    cells: [f64; 4],
}

impl Pmf2 {
    pub fn new(cells: [f64; 4]) -> Result<Self, ProbError> {
        Ok(Pmf2 {
            cells: validate_normalized(cells)?,
        })
    }

    pub fn uniform() -> Self {
        Pmf2 { cells: [0.25; 4] }
    }

    #[inline]
    pub fn get(&self, a: Sign, b: Sign) -> f64 {
        self.cells[a.index() * 2 + b.index()]
    }

    #[inline]
    pub fn cells(&self) -> &[f64; 4] {
        &self.cells
    }

    pub fn entropy(&self) -> f64 {
        dense::entropy_slice(&self.cells)
    }
}

/// Output of [`marginalize`], depending on how many axes were kept.
#[derive(Clone, Debug, PartialEq)]
pub enum Marginal {
    Single(BinaryDist),
    Pair(Pmf2),
    Full(Pmf3),
}

/// Shannon entropy in bits of a normalized distribution given as a slice.
///
/// Uses the convention 0·log 0 = 0. Errors if the slice has negative entries
/// or does not sum to 1 within [`RENORMALIZATION_EPS`].
pub fn entropy(dist: &[f64]) -> Result<f64, ProbError> {
    for (index, &value) in dist.iter().enumerate() {
        if !value.is_finite() {
            return Err(ProbError::NotFinite { index });
        }
        if value < 0.0 {
            return Err(ProbError::NegativeEntry { index, value });
        }
    }
    let sum: f64 = dist.iter().sum();
    if (sum - 1.0).abs() > RENORMALIZATION_EPS {
        return Err(ProbError::NotNormalized { sum });
    }
    Ok(dense::entropy_slice(dist))
}

/// Entropy of the marginal over a subset of axes (set semantics).
fn subset_entropy(p: &Pmf3, axes: &[Axis3]) -> f64 {
    let keep_x = axes.contains(&Axis3::X);
    let keep_y = axes.contains(&Axis3::Y);
    let keep_z = axes.contains(&Axis3::Z);
    let mut bins = [0.0f64; 8];
    for (i, &v) in p.cells().iter().enumerate() {
        let mut key = 0usize;
        if keep_x {
            key = key * 2 + (i >> 2);
        }
        if keep_y {
            key = key * 2 + ((i >> 1) & 1);
        }
        if keep_z {
            key = key * 2 + (i & 1);
        }
        bins[key] += v;
    }
    let n = 1usize << (keep_x as usize + keep_y as usize + keep_z as usize);
    dense::entropy_slice(&bins[..n])
}

fn check_distinct(axes: &[Axis3]) -> Result<(), ProbError> {
    for (i, a) in axes.iter().enumerate() {
        if axes[i + 1..].contains(a) {
            return Err(ProbError::OverlappingAxes);
        }
    }
    Ok(())
}

/// Mutual information I(target : sources) in bits, where `sources` holds one
/// or two axes distinct from the target.
pub fn mutual_information(p: &Pmf3, target: Axis3, sources: &[Axis3]) -> Result<f64, ProbError> {
    if sources.is_empty() {
        return Err(ProbError::EmptyAxisSet);
    }
    let mut all = vec![target];
    all.extend_from_slice(sources);
    check_distinct(&all)?;
    let h_target = subset_entropy(p, &[target]);
    let h_sources = subset_entropy(p, sources);
    let h_joint = subset_entropy(p, &all);
    Ok(h_target + h_sources - h_joint)
}

/// Conditional mutual information I(target : source | given) in bits.
pub fn conditional_mutual_information(
    p: &Pmf3,
    target: Axis3,
    source: Axis3,
    given: Axis3,
) -> Result<f64, ProbError> {
    check_distinct(&[target, source, given])?;
    let h_tg = subset_entropy(p, &[target, given]);
    let h_sg = subset_entropy(p, &[source, given]);
    let h_g = subset_entropy(p, &[given]);
    let h_all = p.entropy();
    Ok(h_tg + h_sg - h_g - h_all)
}

/// Co-information CoI(X;Y;Z) = I(X:Y) − I(X:Y|Z) in bits. Symmetric under
/// permutation of the three axes; may be negative (negative values signal
/// synergy).
pub fn co_information(p: &Pmf3) -> f64 {
    dense::coi_xyz(p.cells())
}

/// Sums out the axes not named in `keep`. `keep` has set semantics: the
/// output axes always appear in canonical X, Y, Z order, so keeping all three
/// axes returns the input unchanged.
pub fn marginalize(p: &Pmf3, keep: &[Axis3]) -> Result<Marginal, ProbError> {
    if keep.is_empty() {
        return Err(ProbError::EmptyAxisSet);
    }
    check_distinct(keep)?;
    let keep_x = keep.contains(&Axis3::X);
    let keep_y = keep.contains(&Axis3::Y);
    let keep_z = keep.contains(&Axis3::Z);
    match (keep_x, keep_y, keep_z) {
        (true, true, true) => Ok(Marginal::Full(p.clone())),
        (true, true, false) => Ok(Marginal::Pair(p.marginal_xy())),
        (true, false, true) => Ok(Marginal::Pair(p.marginal_xz())),
        (false, true, true) => Ok(Marginal::Pair(p.marginal_yz())),
        (true, false, false) => Ok(Marginal::Single(p.marginal_x())),
        (false, true, false) => Ok(Marginal::Single(p.marginal_y())),
        (false, false, true) => Ok(Marginal::Single(p.marginal_z())),
        (false, false, false) => unreachable!("non-empty keep set"),
    }
}

/// Text format: one `x y z p` line per cell with x, y, z in {-1, +1};
/// `#` starts a comment, blank lines are skipped, missing cells default to 0.
#[derive(Debug, Error)]
pub enum PmfTextError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error(transparent)]
    Distribution(#[from] ProbError),
}

impl Pmf3 {
    /// Parses the `x y z p` text format. The resulting table must normalize
    /// within [`RENORMALIZATION_EPS`].
    pub fn from_text(text: &str) -> Result<Self, PmfTextError> {
        let mut cells = [0.0f64; 8];
        let mut seen = [false; 8];
        for (lineno, raw) in text.lines().enumerate() {
            let line = lineno + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let tokens: Vec<&str> = content.split_whitespace().collect();
            if tokens.len() != 4 {
                return Err(PmfTextError::Syntax {
                    line,
                    msg: format!("expected 4 fields `x y z p`, found {}", tokens.len()),
                });
            }
            let mut signs = [Sign::Minus; 3];
            for (k, tok) in tokens[..3].iter().enumerate() {
                let v: i64 = tok.parse().map_err(|_| PmfTextError::Syntax {
                    line,
                    msg: format!("coordinate `{tok}` is not an integer"),
                })?;
                signs[k] = Sign::from_int(v).ok_or_else(|| PmfTextError::Syntax {
                    line,
                    msg: format!("coordinate `{tok}` must be -1 or +1"),
                })?;
            }
            let p: f64 = tokens[3].parse().map_err(|_| PmfTextError::Syntax {
                line,
                msg: format!("probability `{}` is not a number", tokens[3]),
            })?;
            if !p.is_finite() {
                return Err(PmfTextError::Syntax {
                    line,
                    msg: format!("probability `{}` is not finite", tokens[3]),
                });
            }
            let idx = cell_index(signs[0], signs[1], signs[2]);
            if seen[idx] {
                return Err(PmfTextError::Syntax {
                    line,
                    msg: format!("duplicate cell ({}, {}, {})", signs[0], signs[1], signs[2]),
                });
            }
            seen[idx] = true;
            cells[idx] = p;
        }
        Ok(Pmf3::new(cells)?)
    }

    /// Writes the table in the text format accepted by [`Pmf3::from_text`].
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for ((x, y, z), p) in self.iter() {
            out.push_str(&format!("{x} {y} {z} {p}\n"));
        }
        out
    }
}

/// Fast entropy and marginal helpers on raw dense tables. These back both the
/// public measures and the hot loop of the decomposition optimizer.
pub(crate) mod dense {
    #[inline]
    fn plogp(p: f64) -> f64 {
        if p > 0.0 {
            p * p.log2()
        } else {
            0.0
        }
    }

    #[inline]
    pub(crate) fn entropy_slice(q: &[f64]) -> f64 {
        -q.iter().copied().map(plogp).sum::<f64>()
    }

    #[inline]
    pub(crate) fn marg_x(q: &[f64; 8]) -> [f64; 2] {
        [q[0] + q[1] + q[2] + q[3], q[4] + q[5] + q[6] + q[7]]
    }

    #[inline]
    pub(crate) fn marg_y(q: &[f64; 8]) -> [f64; 2] {
        [q[0] + q[1] + q[4] + q[5], q[2] + q[3] + q[6] + q[7]]
    }

    #[inline]
    pub(crate) fn marg_z(q: &[f64; 8]) -> [f64; 2] {
        [q[0] + q[2] + q[4] + q[6], q[1] + q[3] + q[5] + q[7]]
    }

    #[inline]
    pub(crate) fn marg_xy(q: &[f64; 8]) -> [f64; 4] {
        [q[0] + q[1], q[2] + q[3], q[4] + q[5], q[6] + q[7]]
    }

    #[inline]
    pub(crate) fn marg_xz(q: &[f64; 8]) -> [f64; 4] {
        [q[0] + q[2], q[1] + q[3], q[4] + q[6], q[5] + q[7]]
    }

    #[inline]
    pub(crate) fn marg_yz(q: &[f64; 8]) -> [f64; 4] {
        [q[0] + q[4], q[1] + q[5], q[2] + q[6], q[3] + q[7]]
    }

    /// I(X : (Y,Z)) on a dense table.
    #[inline]
    pub(crate) fn mi_x_yz(q: &[f64; 8]) -> f64 {
        entropy_slice(&marg_x(q)) + entropy_slice(&marg_yz(q)) - entropy_slice(q)
    }

    /// I(X : Y) on a dense table.
    #[inline]
    pub(crate) fn mi_x_y(q: &[f64; 8]) -> f64 {
        entropy_slice(&marg_x(q)) + entropy_slice(&marg_y(q)) - entropy_slice(&marg_xy(q))
    }

    /// I(X : Z) on a dense table.
    #[inline]
    pub(crate) fn mi_x_z(q: &[f64; 8]) -> f64 {
        entropy_slice(&marg_x(q)) + entropy_slice(&marg_z(q)) - entropy_slice(&marg_xz(q))
    }

    /// I(X : Y | Z) on a dense table.
    #[inline]
    pub(crate) fn cmi_x_y_given_z(q: &[f64; 8]) -> f64 {
        entropy_slice(&marg_xz(q)) + entropy_slice(&marg_yz(q))
            - entropy_slice(&marg_z(q))
            - entropy_slice(q)
    }

    /// I(X : Z | Y) on a dense table.
    #[inline]
    pub(crate) fn cmi_x_z_given_y(q: &[f64; 8]) -> f64 {
        entropy_slice(&marg_xy(q)) + entropy_slice(&marg_yz(q))
            - entropy_slice(&marg_y(q))
            - entropy_slice(q)
    }

    /// CoI(X;Y;Z) = I(X:Y) − I(X:Y|Z) on a dense table.
    #[inline]
    pub(crate) fn coi_xyz(q: &[f64; 8]) -> f64 {
        mi_x_y(q) - cmi_x_y_given_z(q)
    }
}

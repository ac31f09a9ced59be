//! The two explicit realizations shipped as fixtures: generating functions
//! of the G(3) contact symmetries on C^{1|7}, and polynomial fields of F(4)
//! on C^{6|4} together with the matrix form of their degree-0 part.

use super::*;
use crate::prolong::Prolongation;

pub const G3_CONTACT: &str = include_str!("../../data/g3_contact.funcs");
pub const F4_FIELDS: &str = include_str!("../../data/f4_6_4.fields");
pub const COSP_MATRIX: &str = include_str!("../../data/cosp_6_4.matrix");

/// The contact generating functions, even ones first, with degrees from the
/// weights `u = 2`, `ξ = 1`.
pub fn g3_contact_functions(form: &ContactForm) -> Result<Vec<Generator<SuperPolynomial>>> {
    let fx = Fixture::parse(G3_CONTACT)?;
    let mut out = Vec::new();
    for (h, items) in &fx.groups {
        for (i, it) in items.iter().enumerate() {
            let f = it.clone().into_function().ok_or_else(|| Error::Construction(format!("{h} {i}: not a function")))?;
            let degree = form.degree(&f).ok_or_else(|| Error::Construction(format!("{h} {i}: not homogeneous")))?;
            out.push(Generator { label: format!("{h}{i}"), degree, value: f });
        }
    }
    Ok(out)
}

/// The F(4) fields with the degrees stated by their group headers.
pub fn f4_fields() -> Result<(Coordinates, Vec<Generator<SuperVectorField>>)> {
    let fx = Fixture::parse(F4_FIELDS)?;
    let mut out = Vec::new();
    for (h, items) in &fx.groups {
        let (deg, par) = h.split_once(' ').ok_or_else(|| Error::Construction(format!("bad header {h}")))?;
        let degree: i32 = deg.parse().map_err(|_| Error::Construction(format!("bad header {h}")))?;
        for (i, it) in items.iter().enumerate() {
            let x = it.clone().into_field().ok_or_else(|| Error::Construction(format!("{h} {i}: not a field")))?;
            out.push(Generator { label: format!("g{degree}{}.{i}", &par[..1]), degree, value: x });
        }
    }
    Ok((fx.coords, out))
}

/// `Σ z ∂_z` over all coordinates.
pub fn euler_field(c: &Coordinates) -> SuperVectorField {
    let nx = c.even.len();
    c.all().into_iter().fold(SuperVectorField::zero(), |acc, z| {
        acc.add(&SuperVectorField::partial(nx, z).times(&SuperPolynomial::var(nx, z)))
    })
}

/// Whether `[E, X] = deg(X) X` for every field.
pub fn grading_matches(e: &SuperVectorField, fields: &[Generator<SuperVectorField>]) -> bool {
    fields.iter().all(|g| super_bracket(e, &g.value) == g.value.scale(&Scalar::int(g.degree as i64)))
}

fn matrix_fixture() -> Result<(Coordinates, Vec<Vec<SuperPolynomial>>, SuperPolynomial)> {
    let mut coords = None;
    let mut rows = Vec::new();
    let mut scalar = None;
    let mut section = String::new();
    for (n, raw) in COSP_MATRIX.lines().enumerate() {
        let line = raw.trim();
        let err = |m: String| Error::Parse { line: n + 1, msg: m };
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("coords") {
            let (e, o) = rest.split_once('|').ok_or_else(|| err("coords need a `|`".into()))?;
            coords = Some(Coordinates::new(&e.split_whitespace().collect::<Vec<_>>(), &o.split_whitespace().collect::<Vec<_>>()));
            continue;
        }
        if let Some(h) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
            section = h.to_string();
            continue;
        }
        let c = coords.as_ref().ok_or_else(|| err("entries before coords".into()))?;
        let parse = |s: &str| -> Result<SuperPolynomial> {
            parse_expr(s, c).map_err(&err)?.into_function().ok_or_else(|| err("not a scalar entry".into()))
        };
        match section.as_str() {
            "matrix" => rows.push(line.split(',').map(|s| parse(s.trim())).collect::<Result<Vec<_>>>()?),
            "scalar" => scalar = Some(parse(line)?),
            _ => return Err(err("unknown section".into())),
        }
    }
    let coords = coords.ok_or(Error::Parse { line: 0, msg: "missing coords".into() })?;
    Ok((coords, rows, scalar.unwrap_or_default()))
}

/// One homogeneous matrix per parameter of the printed degree-0 matrix.
pub fn cosp_generators() -> Result<Vec<(Matrix<Scalar>, Parity)>> {
    let (c, rows, scalar) = matrix_fixture()?;
    let n = rows.len();
    let mut out = Vec::new();
    for z in c.all() {
        let coeff = |p: &SuperPolynomial| p.diff(z).constant_term();
        let mut m = Matrix::zeros(n, n);
        for (i, r) in rows.iter().enumerate() {
            for (j, p) in r.iter().enumerate() {
                m[(i, j)] = coeff(p);
            }
            m[(i, i)] = &m[(i, i)] + &coeff(&scalar);
        }
        out.push((m, z.parity()));
    }
    Ok(out)
}

/// Both presentations of the degree-0 block: the linear fields of the
/// fixture and the printed matrix algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeZeroComparison {
    pub fields: MatrixAlgebraReport,
    pub matrix: MatrixAlgebraReport,
    /// the printed matrices act on coordinates, so they are compared with
    /// the transposed field matrices
    pub same_span: bool,
}

impl DegreeZeroComparison {
    pub fn agree(&self) -> bool {
        self.fields.closed && self.matrix.closed && self.fields.dim == self.matrix.dim && self.fields.derived == self.matrix.derived && self.same_span
    }
}

pub fn degree_zero_comparison() -> Result<DegreeZeroComparison> {
    let (c, fields) = f4_fields()?;
    let mut gens = Vec::new();
    for g in fields.iter().filter(|g| g.degree == 0) {
        let m = linear_matrix(&g.value, &c).ok_or_else(|| Error::Construction(format!("{} is not linear", g.label)))?;
        gens.push((m, parity_of_field(&g.value)?));
    }
    let printed = cosp_generators()?;
    let mut span = SparseEchelon::new(usize::MAX);
    for (m, _) in &printed {
        span.push(flatten(m));
    }
    let same_span = gens.len() == printed.len() && gens.iter().all(|(m, _)| span.contains(flatten(&m.transpose())));
    Ok(DegreeZeroComparison { fields: matrix_algebra(&gens), matrix: matrix_algebra(&printed), same_span })
}

/// Result of reducing `der_0` of the contact symbol by the odd cubic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicReport {
    pub der0: SuperDim,
    pub annihilator: SuperDim,
    pub derived: SuperDim,
}

/// The symbol spanned by `1, ξ1..ξ7` under the Lagrange bracket.
pub fn contact_symbol(form: &ContactForm) -> Result<GradedLieSuperalgebra> {
    let nx = 1;
    let mut gens = vec![Generator { label: "1".into(), degree: -2, value: SuperPolynomial::constant(nx, Scalar::one()) }];
    for (i, name) in form.coords.odd.iter().enumerate() {
        gens.push(Generator { label: name.clone(), degree: -1, value: SuperPolynomial::var(nx, Coord::Odd(i)) });
    }
    Ok(function_closure(form, "heis(1|7)", &gens)?.algebra)
}

/// `der_0` of the contact symbol, computed by one prolongation step, cut
/// down to the maps that rescale the cubic.
pub fn cubic_annihilator(form: &ContactForm) -> Result<(CubicReport, Vec<Matrix<Scalar>>)> {
    let m = contact_symbol(form)?;
    let mut p = Prolongation::new(m.clone())?;
    p.prolong_step()?;
    let g1 = m.indices_of_degree(-1);
    let ad: Vec<Vec<Vector>> = p.levels[0].iter().map(|e| e.ad.clone()).collect();
    let maps = level_maps(&ad, &g1);
    // write the cubic in the basis X_{ξ_i}(0) of the distribution at the origin
    let nx = 1;
    let n = g1.len();
    let mut frame = Matrix::zeros(n, n);
    for (a, &i) in g1.iter().enumerate() {
        let label = &m.basis()[i].label;
        let j = form.coords.odd.iter().position(|n| n == label).expect("degree -1 is spanned by the odd coordinates");
        let x = form.contact_field(&SuperPolynomial::var(nx, Coord::Odd(j)));
        for (c, v) in x.at_origin() {
            if let Coord::Odd(j) = c {
                frame[(j, a)] = v;
            }
        }
    }
    let q0 = seven_cubic();
    let idx = |i: usize, j: usize, k: usize| (i * n + j) * n + k;
    let mut q = vec![Scalar::zero(); n * n * n];
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let mut s = Scalar::zero();
                for i in 0..n {
                    if frame[(i, a)].is_zero() {
                        continue;
                    }
                    for j in 0..n {
                        if frame[(j, b)].is_zero() {
                            continue;
                        }
                        for k in 0..n {
                            if !frame[(k, c)].is_zero() {
                                s += &(&(&frame[(i, a)] * &frame[(j, b)]) * &frame[(k, c)]) * &q0[idx(i, j, k)];
                            }
                        }
                    }
                }
                q[idx(a, b, c)] = s;
            }
        }
    }
    let ann = form_annihilator(&maps, &q);
    let gens: Vec<(Matrix<Scalar>, Parity)> = ann.iter().map(|a| (a.clone(), Parity::Even)).collect();
    let rep = matrix_algebra(&gens);
    Ok((CubicReport { der0: p.level_dims()[0], annihilator: rep.dim, derived: rep.derived }, ann))
}

//! The glued curve as a quotient of a power series ring.
//!
//! Variables `x_1..x_n` map to the generators of `A`, and for each minimal
//! generator `i_j` of `I₀` a pair `y_j, z_j` is added with
//! `ψ_B(y_j) = 0`, `ψ_B(z_j) = f(i_j)`, `ψ_C(y_j) = g(i_j)`, `ψ_C(z_j) = 0`.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::BiAmalgSpec;
use crate::error::Result;
use crate::oracle::series::TruncatedSeries;

/// `coeff · Π var^exp`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub coeff: i64,
    /// `(variable index, exponent)` pairs with positive exponents.
    pub powers: Vec<(usize, u32)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Polynomial {
    pub terms: Vec<Term>,
}

impl Polynomial {
    fn var(i: usize) -> Self {
        Polynomial { terms: vec![Term { coeff: 1, powers: vec![(i, 1)] }] }
    }

    fn binomial(left: Vec<(usize, u32)>, right: Vec<(usize, u32)>) -> Self {
        Polynomial {
            terms: vec![Term { coeff: 1, powers: left }, Term { coeff: -1, powers: right }],
        }
    }

    /// Substitutes a series for every variable.
    pub fn evaluate(&self, values: &[TruncatedSeries]) -> TruncatedSeries {
        let zero = values[0].scale(0);
        self.terms.iter().fold(zero.clone(), |acc, term| {
            let one = TruncatedSeries::monomial(zero.prime(), zero.truncation(), 0, 1)
                .expect("prime already checked");
            let product = term
                .powers
                .iter()
                .fold(one, |p, &(v, e)| &p * &values[v].pow(e));
            &acc + &product.scale(term.coeff)
        })
    }

    /// Renders with the given variable names.
    pub fn display<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        PolyDisplay { poly: self, names }
    }
}

struct PolyDisplay<'a> {
    poly: &'a Polynomial,
    names: &'a [String],
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, term) in self.poly.terms.iter().enumerate() {
            let c = term.coeff;
            match (k, c < 0) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if c.abs() != 1 || term.powers.is_empty() {
                write!(f, "{}", c.abs())?;
            }
            for (i, &(v, e)) in term.powers.iter().enumerate() {
                if i > 0 {
                    write!(f, "*")?;
                }
                write!(f, "{}", self.names[v])?;
                if e != 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

/// Where one variable goes: `t`-exponents in each normalization, `None`
/// meaning zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Image {
    pub variable: String,
    pub first: Option<i64>,
    pub second: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    pub variables: Vec<String>,
    pub images: Vec<Image>,
    /// Generators of `ker ψ_B`.
    pub kernel_first: Vec<Polynomial>,
    /// Generators of `ker ψ_C`.
    pub kernel_second: Vec<Polynomial>,
    pub note: String,
}

impl Presentation {
    /// Number of `y` (and of `z`) variables.
    pub fn gluing_rank(&self) -> usize {
        self.images.iter().filter(|i| i.variable.starts_with('y')).count()
    }

    fn side_values(&self, side: usize, prime: u32, truncation: usize) -> Result<Vec<TruncatedSeries>> {
        self.images
            .iter()
            .map(|img| {
                let e = if side == 0 { img.first } else { img.second };
                match e {
                    Some(e) => TruncatedSeries::monomial(prime, truncation, e as usize, 1),
                    None => TruncatedSeries::zero(prime, truncation),
                }
            })
            .collect()
    }

    /// Kernel generators (side, index) whose image is not zero mod `t^N`.
    pub fn kernel_residues(&self, prime: u32, truncation: usize) -> Result<Vec<(usize, usize)>> {
        let mut bad = Vec::new();
        for (side, kernel) in [&self.kernel_first, &self.kernel_second].into_iter().enumerate() {
            let values = self.side_values(side, prime, truncation)?;
            for (k, p) in kernel.iter().enumerate() {
                if !p.evaluate(&values).is_zero() {
                    bad.push((side, k));
                }
            }
        }
        Ok(bad)
    }

    /// Renders kernel lists as strings.
    pub fn kernel_strings(&self) -> [Vec<String>; 2] {
        let render = |k: &[Polynomial]| k.iter().map(|p| p.display(&self.variables).to_string()).collect();
        [render(&self.kernel_first), render(&self.kernel_second)]
    }
}

/// Writes `target` as a non-negative combination of `gens`.
fn factor(gens: &[i64], target: i64) -> Vec<u32> {
    let n = target.max(0) as usize;
    // last[s] = index of a generator used to reach s
    let mut last: Vec<Option<usize>> = vec![None; n + 1];
    let mut reach = vec![false; n + 1];
    reach[0] = true;
    for s in 1..=n {
        for (k, &g) in gens.iter().enumerate() {
            let g = g as usize;
            if g <= s && reach[s - g] {
                reach[s] = true;
                last[s] = Some(k);
                break;
            }
        }
    }
    let mut counts = vec![0u32; gens.len()];
    let mut s = n;
    while s > 0 {
        let k = last[s].expect("target lies in the semigroup");
        counts[k] += 1;
        s -= gens[k] as usize;
    }
    counts
}

fn monomial(counts: &[u32]) -> Vec<(usize, u32)> {
    counts
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(v, &e)| (v, e))
        .collect()
}

/// Emits variables, images and the structural kernel generators
/// `(y) + (z - i(x)) + I_A` and `(y - i(x)) + (z) + I_A`.
pub fn presentation(spec: &BiAmalgSpec) -> Presentation {
    let sa = spec.domain();
    let gens = sa.generators().to_vec();
    let gens = if gens.is_empty() { vec![1] } else { gens };
    let gluing = spec.gluing_ideal().generators().to_vec();
    let n = gens.len();
    let m = gluing.len();
    let [d1, d2] = [spec.sides()[0].degree(), spec.sides()[1].degree()];

    let mut variables = Vec::new();
    let mut images = Vec::new();
    for (k, &a) in gens.iter().enumerate() {
        variables.push(format!("x{}", k + 1));
        images.push(Image { variable: format!("x{}", k + 1), first: Some(d1 * a), second: Some(d2 * a) });
    }
    for (k, &i) in gluing.iter().enumerate() {
        variables.push(format!("y{}", k + 1));
        images.push(Image { variable: format!("y{}", k + 1), first: None, second: Some(d2 * i) });
    }
    for (k, &i) in gluing.iter().enumerate() {
        variables.push(format!("z{}", k + 1));
        images.push(Image { variable: format!("z{}", k + 1), first: Some(d1 * i), second: None });
    }

    let mut relations = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let g = num_integer::gcd(gens[a], gens[b]);
            relations.push(Polynomial::binomial(
                vec![(a, (gens[b] / g) as u32)],
                vec![(b, (gens[a] / g) as u32)],
            ));
        }
    }

    let lifts: Vec<Vec<(usize, u32)>> = gluing.iter().map(|&i| monomial(&factor(&gens, i))).collect();
    let mut kernel_first = Vec::new();
    let mut kernel_second = Vec::new();
    for j in 0..m {
        kernel_first.push(Polynomial::var(n + j));
    }
    for (j, lift) in lifts.iter().enumerate() {
        kernel_first.push(Polynomial::binomial(vec![(n + m + j, 1)], lift.clone()));
        kernel_second.push(Polynomial::binomial(vec![(n + j, 1)], lift.clone()));
    }
    for j in 0..m {
        kernel_second.push(Polynomial::var(n + m + j));
    }
    kernel_first.extend(relations.iter().cloned());
    kernel_second.extend(relations);

    Presentation {
        variables,
        images,
        kernel_first,
        kernel_second,
        note: "structural generators; completeness not certified".into(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{MapKind, Mode, SpecData};

    fn spec(data: SpecData) -> BiAmalgSpec {
        BiAmalgSpec::from_data(&data).unwrap()
    }

    #[test]
    fn bi_amalgamation_images_and_kernels() {
        let p = presentation(&spec(SpecData {
            mode: Mode::BiAmalg,
            a: None,
            b: Some(vec![4, 7, 9]),
            c: Some(vec![5, 8, 11]),
            f: Some(MapKind::Power(7)),
            g: Some(MapKind::Power(11)),
            j: Some(vec![4, 9]),
            jp: Some(vec![5, 8]),
        }));
        assert_eq!(p.variables, vec!["x1", "y1", "z1"]);
        assert_eq!(p.gluing_rank(), 1);
        let images: Vec<_> = p.images.iter().map(|i| (i.first, i.second)).collect();
        assert_eq!(images, vec![(Some(7), Some(11)), (None, Some(33)), (Some(21), None)]);
        let [kb, kc] = p.kernel_strings();
        assert_eq!(kb, vec!["y1", "z1 - x1^3"]);
        assert_eq!(kc, vec!["y1 - x1^3", "z1"]);
        assert_eq!(p.kernel_residues(3, 40).unwrap(), vec![]);
    }

    #[test]
    fn duplication_over_singular_branch_carries_relations() {
        let p = presentation(&spec(SpecData {
            mode: Mode::Duplication,
            a: Some(vec![3, 4]),
            b: None,
            c: None,
            f: None,
            g: None,
            j: Some(vec![7]),
            jp: None,
        }));
        assert_eq!(p.variables, vec!["x1", "x2", "y1", "z1"]);
        let [kb, kc] = p.kernel_strings();
        assert_eq!(kb, vec!["y1", "z1 - x1*x2", "x1^4 - x2^3"]);
        assert_eq!(kc, vec!["y1 - x1*x2", "z1", "x1^4 - x2^3"]);
        assert_eq!(p.kernel_residues(5, 40).unwrap(), vec![]);
    }

    #[test]
    fn a_wrong_kernel_entry_is_detected() {
        let mut p = presentation(&spec(SpecData {
            mode: Mode::Amalg,
            a: None,
            b: Some(vec![3, 7, 8]),
            c: None,
            f: Some(MapKind::Power(3)),
            g: None,
            j: Some(vec![7, 8]),
            jp: None,
        }));
        p.kernel_first.push(Polynomial::var(0));
        assert_eq!(p.kernel_residues(3, 40).unwrap(), vec![(0, 2)]);
    }
}

//! The principal element `h0` (with `alpha(h0) = 2` on every simple root) and
//! the restriction functional `lambda -> lambda(h0)` on the weight lattice.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootsys::{CartanType, RootSystem, SimpleType, Weight};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ComponentMinimum {
    pub component: String,
    pub min_value: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrincipalElement {
    /// `iota[i] = omega_i(h0)`.
    iota: Vec<i64>,
    minima: Vec<(SimpleType, i64)>,
}

impl PrincipalElement {
    /// `iota = (2, ..., 2) A^{-1}`. A non-integral entry means the Cartan
    /// matrix convention is broken and is reported as an internal error.
    pub fn new(rs: &RootSystem) -> Result<Self> {
        let n = rs.rank();
        let two = BigRational::from_integer(BigInt::from(2));
        let mut iota = Vec::with_capacity(n);
        for j in 0..n {
            let mut acc = BigRational::zero();
            for i in 0..n {
                acc += &two * &rs.cartan_inv()[i][j];
            }
            if !acc.is_integer() {
                return Err(Error::Inconsistent(format!(
                    "omega_{}(h0) = {acc} is not an integer",
                    j + 1
                )));
            }
            let v: i64 = acc
                .to_integer()
                .try_into()
                .map_err(|_| Error::Inconsistent("omega(h0) overflow".into()))?;
            iota.push(v);
        }
        let minima = rs
            .cartan_type()
            .components()
            .iter()
            .zip(rs.cartan_type().component_ranges())
            .map(|(c, r)| (*c, iota[r].iter().copied().min().expect("nonempty")))
            .collect();
        Ok(PrincipalElement { iota, minima })
    }

    pub fn iota(&self) -> &[i64] {
        &self.iota
    }

    pub fn rank(&self) -> usize {
        self.iota.len()
    }

    /// `m(g)` for each simple factor, in component order.
    pub fn minima(&self) -> Vec<ComponentMinimum> {
        self.minima
            .iter()
            .map(|(c, m)| ComponentMinimum {
                component: c.to_string(),
                min_value: *m,
            })
            .collect()
    }

    /// `lambda(h0)`.
    pub fn restrict(&self, lambda: &Weight) -> Result<i64> {
        if lambda.rank() != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                found: lambda.rank(),
            });
        }
        Ok(self.restrict_coords(lambda.coords()))
    }

    pub(crate) fn restrict_coords(&self, coords: &[i64]) -> i64 {
        coords.iter().zip(&self.iota).map(|(a, b)| a * b).sum()
    }

    pub fn restrict_rational(&self, lambda: &[BigRational]) -> Result<BigRational> {
        if lambda.len() != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                found: lambda.len(),
            });
        }
        Ok(lambda
            .iter()
            .zip(&self.iota)
            .map(|(a, &b)| a * BigInt::from(b))
            .sum())
    }
}

/// `m(g)` per simple factor of `cartan_type`.
pub fn min_fundamental_value(cartan_type: &CartanType) -> Result<Vec<i64>> {
    let rs = RootSystem::new(cartan_type.clone())?;
    let pe = PrincipalElement::new(&rs)?;
    Ok(pe.minima.iter().map(|(_, m)| *m).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::{WeylGroup, DEFAULT_WEYL_GUARD};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn pe(t: &str) -> (RootSystem, PrincipalElement) {
        let rs = RootSystem::new(t.parse().unwrap()).unwrap();
        let p = PrincipalElement::new(&rs).unwrap();
        (rs, p)
    }

    #[test]
    fn iota_examples() {
        assert_eq!(pe("C2").1.iota(), &[3, 4]);
        assert_eq!(pe("A2").1.iota(), &[2, 2]);
        let mut g2 = pe("G2").1.iota().to_vec();
        g2.sort();
        assert_eq!(g2, vec![6, 10]);
    }

    #[test]
    fn restrict_examples() {
        let (_, c2) = pe("C2");
        assert_eq!(c2.restrict(&Weight(vec![1, 1])).unwrap(), 7);
        assert_eq!(c2.restrict(&Weight(vec![5, 2])).unwrap(), 3 * 5 + 4 * 2);
        assert_eq!(c2.restrict(&Weight::zero(2)).unwrap(), 0);
        assert_eq!(pe("A2").1.restrict(&Weight(vec![1, 1])).unwrap(), 4);
        assert!(matches!(
            c2.restrict(&Weight(vec![1, 1, 1])),
            Err(Error::RankMismatch { .. })
        ));
    }

    #[test]
    fn simple_roots_restrict_to_two() {
        for t in [
            "A1", "A5", "B4", "C3", "D5", "E6", "E7", "E8", "F4", "G2", "A3xG2",
        ] {
            let (rs, p) = pe(t);
            for j in 0..rs.rank() {
                assert_eq!(
                    p.restrict(&Weight(rs.simple_root_weight(j))).unwrap(),
                    2,
                    "{t}"
                );
            }
        }
    }

    #[test]
    fn minimum_table() {
        let m = |t: &str| min_fundamental_value(&t.parse().unwrap()).unwrap();
        assert_eq!(m("A5"), vec![5]);
        assert_eq!(m("B4"), vec![8]);
        assert_eq!(m("E8"), vec![58]);
        assert_eq!(m("A3xG2"), vec![3, 6]);
    }

    #[test]
    fn long_simple_root_of_c() {
        for l in 2..=6 {
            let (_, p) = pe(&format!("C{l}"));
            assert_eq!(p.iota()[l - 1], (l * l) as i64);
        }
    }

    #[test]
    fn longest_element_negates_restriction() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for t in ["A3", "B3", "C3", "G2", "F4", "A1xC2"] {
            let (rs, p) = pe(t);
            let g = WeylGroup::enumerate(&rs, DEFAULT_WEYL_GUARD).unwrap();
            for _ in 0..100 {
                let l = Weight((0..rs.rank()).map(|_| rng.gen_range(-9..=9)).collect());
                let moved = g.act(g.longest(), &l).unwrap();
                assert_eq!(p.restrict(&moved).unwrap(), -p.restrict(&l).unwrap(), "{t}");
            }
        }
    }
}

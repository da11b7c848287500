//! Power series whose coefficients are Laurent combinations of torus characters.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::Rational;
use crate::series::{DenomFactor, RationalSeries, SeriesPrefix};

/// Exponent vector `a` of the character `q^a = q_1^{a_1} ... q_m^{a_m}`.
pub type Character = Vec<i32>;

/// `sum_k c_k q^{a_k} t^{e_k} / prod_j (1 - q^{b_j} t^{f_j})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedForm {
    pub numerator: Vec<(BigInt, Character, u32)>,
    pub denominator: Vec<(Character, u32)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterSeries {
    pub rank: usize,
    /// `coeffs[n]` is the character of the degree-`n` piece, for `n <= bound`.
    pub coeffs: Vec<BTreeMap<Character, BigInt>>,
    pub closed: Option<ClosedForm>,
}

impl CharacterSeries {
    pub fn zero(rank: usize, bound: usize) -> Self {
        CharacterSeries { rank, coeffs: vec![BTreeMap::new(); bound + 1], closed: None }
    }

    pub fn bound(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Expands a closed form through degree `bound`.
    pub fn from_closed(rank: usize, closed: ClosedForm, bound: usize) -> Self {
        let mut coeffs: Vec<BTreeMap<Character, BigInt>> = vec![BTreeMap::new(); bound + 1];
        for (c, ch, e) in &closed.numerator {
            if (*e as usize) <= bound {
                add_into(&mut coeffs[*e as usize], ch, c);
            }
        }
        for (ch, f) in &closed.denominator {
            let f = *f as usize;
            // multiply by 1/(1 - q^ch t^f): c_n += q^ch * c_{n-f}, ascending
            if f == 0 {
                continue;
            }
            for n in f..=bound {
                let shifted: Vec<(Character, BigInt)> = coeffs[n - f]
                    .iter()
                    .map(|(a, c)| (a.iter().zip(ch).map(|(x, y)| x + y).collect(), c.clone()))
                    .collect();
                for (a, c) in shifted {
                    add_into(&mut coeffs[n], &a, &c);
                }
            }
        }
        CharacterSeries { rank, coeffs, closed: Some(closed) }
    }

    pub fn truncate(&self, n: usize) -> Self {
        CharacterSeries {
            rank: self.rank,
            coeffs: self.coeffs.iter().take(n + 1).cloned().collect(),
            closed: self.closed.clone(),
        }
    }

    /// Characters occurring with nonzero coefficient through the bound.
    pub fn support(&self) -> BTreeSet<Character> {
        self.coeffs.iter().flat_map(|m| m.keys().cloned()).collect()
    }

    /// Keeps only the characters satisfying `keep`; the closed form is dropped.
    pub fn restrict<F: Fn(&Character) -> bool>(&self, keep: F) -> Self {
        CharacterSeries {
            rank: self.rank,
            coeffs: self
                .coeffs
                .iter()
                .map(|m| m.iter().filter(|(a, _)| keep(a)).map(|(a, c)| (a.clone(), c.clone())).collect())
                .collect(),
            closed: None,
        }
    }
}

fn add_into(map: &mut BTreeMap<Character, BigInt>, ch: &Character, c: &BigInt) {
    let entry = map.entry(ch.clone()).or_insert_with(BigInt::zero);
    *entry += c;
    if entry.is_zero() {
        map.remove(ch);
    }
}

/// Result of the summation map `q -> 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct Integrated {
    pub prefix: SeriesPrefix,
    pub closed: Option<RationalSeries>,
}

/// Replaces every Laurent coefficient by the sum of its coefficients. A closed
/// form is carried along when every denominator factor has positive t-degree.
pub fn integrate_characters(cs: &CharacterSeries) -> Integrated {
    let prefix = SeriesPrefix::new(
        cs.coeffs
            .iter()
            .map(|m| Rational::from_integer(m.values().fold(BigInt::zero(), |a, c| a + c)))
            .collect(),
    );
    let closed = cs.closed.as_ref().and_then(|cf| {
        if cf.denominator.iter().any(|(_, f)| *f == 0) {
            return None;
        }
        let deg = cf.numerator.iter().map(|(_, _, e)| *e as usize).max().unwrap_or(0);
        let mut num = vec![BigInt::zero(); deg + 1];
        for (c, _, e) in &cf.numerator {
            num[*e as usize] += c;
        }
        let den = cf.denominator.iter().map(|(_, f)| DenomFactor::new(*f, 1)).collect();
        RationalSeries::new(num, den).ok()
    });
    Integrated { prefix, closed }
}

/// Character of a single monomial exponent vector.
pub fn character_of(exps: &[u16]) -> Character {
    exps.iter().map(|&e| e as i32).collect()
}

/// The trivial character.
pub fn unit(rank: usize) -> Character {
    vec![0; rank]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::expand_series;
    use num_traits::One;

    fn one() -> BigInt {
        BigInt::one()
    }

    fn polynomial_ring(m: usize, bound: usize) -> CharacterSeries {
        let den = (0..m)
            .map(|i| {
                let mut ch = vec![0; m];
                ch[i] = 1;
                (ch, 1)
            })
            .collect();
        let closed = ClosedForm { numerator: vec![(one(), unit(m), 0)], denominator: den };
        CharacterSeries::from_closed(m, closed, bound)
    }

    #[test]
    fn plane_integrates_to_double_pole() {
        let cs = polynomial_ring(2, 8);
        let int = integrate_characters(&cs);
        assert_eq!(int.prefix, SeriesPrefix::from_ints(1..=9));
        let rs = int.closed.unwrap();
        assert_eq!(expand_series(&rs, 8), int.prefix);
        assert_eq!(cs.coeffs[2].len(), 3);
    }

    #[test]
    fn xy_quotient() {
        let closed = ClosedForm {
            numerator: vec![(one(), vec![0, 0], 0), (-one(), vec![1, 1], 2)],
            denominator: vec![(vec![1, 0], 1), (vec![0, 1], 1)],
        };
        let cs = CharacterSeries::from_closed(2, closed, 6);
        let int = integrate_characters(&cs);
        assert_eq!(int.prefix, SeriesPrefix::from_ints([1, 2, 2, 2, 2, 2, 2]));
        let want = RationalSeries::from_i64(&[1, 1], &[(1, 1)]);
        assert_eq!(int.closed.unwrap(), want);
    }

    #[test]
    fn zero_and_truncation() {
        let z = CharacterSeries::zero(2, 4);
        assert_eq!(integrate_characters(&z).prefix, SeriesPrefix::from_ints([0; 5]));
        let cs = polynomial_ring(3, 10);
        for n in 0..=10 {
            assert_eq!(integrate_characters(&cs.truncate(n)).prefix, integrate_characters(&cs).prefix.truncate(n));
        }
    }
}

//! Seifert matrices of `(2q - 1)`-knots and the Alexander invariants they determine.
//!
//! Convention: the middle-dimensional Alexander module is presented by
//! `t*A + (-1)^q * A^T`, and `A` is a valid Seifert matrix when
//! `A + (-1)^q * A^T` is unimodular.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::{AlexanderClass, LaurentPoly};
use crate::matrix::{det_int, det_laurent, IntMatrix, LaurentMatrix};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SeifertMatrix {
    a: IntMatrix,
    q: u32,
}

/// `(-1)^q`
fn parity_sign(q: u32) -> BigInt {
    if q.is_odd() {
        -BigInt::one()
    } else {
        BigInt::one()
    }
}

impl SeifertMatrix {
    /// Checks unimodularity of `A + (-1)^q A^T` and, for odd `q`, even size.
    pub fn new(a: IntMatrix, q: u32) -> Result<Self> {
        if q == 0 {
            return Err(Error::ZeroParity);
        }
        if q.is_odd() && a.size().is_odd() {
            return Err(Error::OddSizeSkew { size: a.size() });
        }
        let sign = parity_sign(q);
        let sym = a.add(&a.transpose().map(|x| x * &sign));
        let det = det_int(&sym);
        if !det.abs().is_one() {
            return Err(Error::NonUnimodular { det });
        }
        Ok(SeifertMatrix { a, q })
    }

    /// The unknot: the empty Seifert matrix.
    pub fn trivial(q: u32) -> Self {
        SeifertMatrix {
            a: IntMatrix::empty(),
            q: q.max(1),
        }
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.a
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// Knot dimension `2q - 1`.
    pub fn knot_dimension(&self) -> u32 {
        2 * self.q - 1
    }

    /// `t*A + (-1)^q * A^T`, entrywise.
    pub fn presentation_matrix(&self) -> LaurentMatrix {
        let sign = parity_sign(self.q);
        let at = self.a.transpose();
        LaurentMatrix::from_fn(self.a.size(), |i, j| {
            LaurentPoly::new(0, vec![at.get(i, j) * &sign, self.a.get(i, j).clone()])
        })
    }

    /// The Alexander polynomial up to units.
    pub fn alexander_polynomial(&self) -> LaurentPoly {
        det_laurent(&self.presentation_matrix())
    }

    pub fn alexander_class(&self) -> AlexanderClass {
        self.alexander_polynomial().canonicalize()
    }

    pub fn knottedness_certificate(&self) -> KnottednessCertificate {
        KnottednessCertificate::from_class(
            self.alexander_class(),
            "Alexander polynomial det(t*A + (-1)^q*A^T)",
        )
    }

    /// Orientation reversal `-K`: `A -> A^T`.
    pub fn reverse(&self) -> Self {
        SeifertMatrix {
            a: self.a.transpose(),
            q: self.q,
        }
    }

    /// Mirror image `K*`: `A -> -A^T`.
    pub fn mirror(&self) -> Self {
        SeifertMatrix {
            a: self.a.transpose().neg(),
            q: self.q,
        }
    }

    /// Block sum, the Seifert matrix of the connected sum.
    pub fn connected_sum(&self, other: &Self) -> Result<Self> {
        if self.q != other.q {
            return Err(Error::ParityMismatch {
                left: self.q,
                right: other.q,
            });
        }
        Ok(SeifertMatrix {
            a: self.a.block_diag(&other.a, BigInt::zero()),
            q: self.q,
        })
    }

    /// `[K, -K, K*, -K*]`
    pub fn orientation_variants(&self) -> [SeifertMatrix; 4] {
        [
            self.clone(),
            self.reverse(),
            self.mirror(),
            self.mirror().reverse(),
        ]
    }
}

impl fmt::Display for SeifertMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] (q = {})", self.a, self.q)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    TrulyKnotted,
    /// The invariant is a unit or zero. This is not a proof of unknottedness.
    NotDistinguished,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::TrulyKnotted => "truly knotted",
            Verdict::NotDistinguished => "not distinguished from the unknot",
        })
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct KnottednessCertificate {
    verdict: Verdict,
    evidence: AlexanderClass,
    narrative: String,
}

impl KnottednessCertificate {
    /// Non-unit, nonzero evidence certifies knottedness; anything else is inconclusive.
    pub fn from_class(evidence: AlexanderClass, source: &str) -> Self {
        let (verdict, narrative) = if evidence.is_zero() {
            (
                Verdict::NotDistinguished,
                format!("{source} vanishes; the order ideal gives no obstruction"),
            )
        } else if evidence.is_unit() {
            (
                Verdict::NotDistinguished,
                format!("{source} is a unit; the module is trivial and no obstruction follows"),
            )
        } else {
            (
                Verdict::TrulyKnotted,
                format!(
                    "{source} = {evidence} is not a unit, so the Alexander module is \
                     nontrivial and the knot is not equivalent to the standard sphere"
                ),
            )
        };
        KnottednessCertificate {
            verdict,
            evidence,
            narrative,
        }
    }

    pub fn verdict(&self) -> Verdict {
        self.verdict
    }

    pub fn evidence(&self) -> &AlexanderClass {
        &self.evidence
    }

    pub fn narrative(&self) -> &str {
        &self.narrative
    }
}

impl fmt::Display for KnottednessCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "verdict: {}", self.verdict)?;
        writeln!(f, "evidence: {}", self.evidence)?;
        write!(f, "reason: {}", self.narrative)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seifert(s: &str, q: u32) -> SeifertMatrix {
        SeifertMatrix::new(s.parse().unwrap(), q).unwrap()
    }

    fn class(s: &str) -> AlexanderClass {
        s.parse::<LaurentPoly>().unwrap().canonicalize()
    }

    #[test]
    fn validate_examples() {
        seifert("1,1;0,-1", 3);
        assert_eq!(seifert("", 3).matrix().size(), 0);
        assert_eq!(
            SeifertMatrix::new("1,0;0,1".parse().unwrap(), 3),
            Err(Error::NonUnimodular {
                det: BigInt::zero()
            })
        );
        assert_eq!(
            SeifertMatrix::new("1".parse().unwrap(), 1),
            Err(Error::OddSizeSkew { size: 1 })
        );
        assert_eq!(
            SeifertMatrix::new("1,1;0,-1".parse().unwrap(), 0),
            Err(Error::ZeroParity)
        );
    }

    #[test]
    fn even_q_uses_symmetric_form() {
        // A + A^T = (2) for A = (1): det 2, rejected
        assert!(matches!(
            SeifertMatrix::new("1".parse().unwrap(), 2),
            Err(Error::NonUnimodular { .. })
        ));
        // a 1x1 matrix never works for even q since 2a is never ±1
        let s = seifert("0,1;0,0", 2);
        assert_eq!(s.presentation_matrix().to_string(), "0,t;1,0");
    }

    #[test]
    fn presentation_examples() {
        assert_eq!(
            seifert("1,1;0,-1", 3).presentation_matrix(),
            "t-1,t;-1,-t+1".parse().unwrap()
        );
        assert_eq!(seifert("", 3).presentation_matrix().size(), 0);
        assert_eq!(
            seifert("-1,1;0,-1", 1).presentation_matrix(),
            "-t+1,t;-1,-t+1".parse().unwrap()
        );
    }

    #[test]
    fn alexander_class_examples() {
        assert_eq!(
            seifert("1,1;0,-1", 3).alexander_class(),
            class("t^2 - 3t + 1")
        );
        assert_eq!(seifert("", 5).alexander_class(), AlexanderClass::one());
        assert_eq!(
            seifert("-1,1;0,-1", 1).alexander_class(),
            class("t^2 - t + 1")
        );
    }

    #[test]
    fn certificate_examples() {
        let c = seifert("1,1;0,-1", 3).knottedness_certificate();
        assert_eq!(c.verdict(), Verdict::TrulyKnotted);
        assert_eq!(c.evidence(), &class("t^2 - 3t + 1"));

        let c = seifert("", 3).knottedness_certificate();
        assert_eq!(c.verdict(), Verdict::NotDistinguished);
        assert_eq!(c.evidence(), &AlexanderClass::one());

        let c = seifert("-1,1;0,-1", 1).knottedness_certificate();
        assert_eq!(c.verdict(), Verdict::TrulyKnotted);
        assert_eq!(c.evidence(), &class("t^2 - t + 1"));
    }

    #[test]
    fn orientation_examples() {
        let s = seifert("1,1;0,-1", 3);
        assert_eq!(s.reverse().matrix(), &"1,0;1,-1".parse().unwrap());
        assert_eq!(seifert("", 3).mirror().matrix().size(), 0);
        assert_eq!(s.mirror().alexander_class(), class("t^2 - 3t + 1"));
        assert_eq!(s.mirror().reverse().matrix(), &"-1,-1;0,1".parse().unwrap());
        for v in s.orientation_variants() {
            SeifertMatrix::new(v.matrix().clone(), v.q()).expect("variants stay valid");
        }
    }

    /// Row-vs-column linking convention is a transpose; both give the same class.
    #[test]
    fn transposed_convention_gives_same_class() {
        let s = seifert("1,1;0,-1", 3);
        let t = seifert("1,0;1,-1", 3);
        assert_eq!(s.alexander_class(), t.alexander_class());
    }

    #[test]
    fn connected_sum_examples() {
        let s = seifert("1,1;0,-1", 3);
        assert_eq!(s.connected_sum(&seifert("", 3)).unwrap(), s);
        let ss = s.connected_sum(&s).unwrap();
        assert_eq!(ss.matrix().size(), 4);
        let d = class("t^2 - 3t + 1").into_polynomial();
        assert_eq!(ss.alexander_class(), (&d * &d).canonicalize());
        assert_eq!(
            s.connected_sum(&seifert("-1,1;0,-1", 1)),
            Err(Error::ParityMismatch { left: 3, right: 1 })
        );
    }
}

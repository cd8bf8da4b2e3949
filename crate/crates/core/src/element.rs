//! A tagged union over every concrete crystal, for code that handles
//! heterogeneous elements (tensor products mixing kinds, CLI seeds).

use std::fmt;

use crate::crystal::{tensor_op, Crystal, Dir, FactorData, Signature};
use crate::elementary::{Aff, BInfLetter, Sign, SpinTensor, TLambda, Trivial};
use crate::path::Path;
use crate::weights::{AffineWeight, ClassicalWeight, Color, ExtInt};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CrystalElement {
    Trivial,
    Spin(Sign),
    Spins(SpinTensor),
    BInf(BInfLetter),
    T(TLambda),
    Tensor(Vec<CrystalElement>),
    Aff(Box<Aff<CrystalElement>>),
    Path(Path),
}

impl CrystalElement {
    pub fn aff(zexp: i64, inner: CrystalElement) -> Self {
        CrystalElement::Aff(Box::new(Aff::new(zexp, inner)))
    }

    /// Affine weight for the kinds that carry one.
    pub fn affine_weight(&self) -> Option<AffineWeight> {
        match self {
            CrystalElement::Aff(a) => {
                Some(a.inner.weight().af() + AffineWeight::new(0, 0, a.zexp))
            }
            CrystalElement::Path(p) => Some(p.affine_weight()),
            _ => None,
        }
    }

    fn tensor_signature(parts: &[CrystalElement], i: Color) -> Signature {
        let data: Vec<FactorData> = parts.iter().map(|b| FactorData::of(b, i)).collect();
        Signature::new(&data)
    }
}

impl Crystal for CrystalElement {
    fn weight(&self) -> ClassicalWeight {
        match self {
            CrystalElement::Trivial => Trivial.weight(),
            CrystalElement::Spin(s) => s.weight(),
            CrystalElement::Spins(s) => s.weight(),
            CrystalElement::BInf(x) => x.weight(),
            CrystalElement::T(t) => t.weight(),
            CrystalElement::Tensor(v) => v.iter().map(|b| b.weight()).sum(),
            CrystalElement::Aff(a) => a.weight(),
            CrystalElement::Path(p) => p.weight(),
        }
    }

    fn epsilon(&self, i: Color) -> ExtInt {
        match self {
            CrystalElement::Trivial => Trivial.epsilon(i),
            CrystalElement::Spin(s) => s.epsilon(i),
            CrystalElement::Spins(s) => s.epsilon(i),
            CrystalElement::BInf(x) => x.epsilon(i),
            CrystalElement::T(t) => t.epsilon(i),
            CrystalElement::Tensor(v) if v.is_empty() => ExtInt::Finite(0),
            CrystalElement::Tensor(v) => Self::tensor_signature(v, i).epsilon(),
            CrystalElement::Aff(a) => a.epsilon(i),
            CrystalElement::Path(p) => p.epsilon(i),
        }
    }

    fn phi(&self, i: Color) -> ExtInt {
        match self {
            CrystalElement::Trivial => Trivial.phi(i),
            CrystalElement::Spin(s) => s.phi(i),
            CrystalElement::Spins(s) => s.phi(i),
            CrystalElement::BInf(x) => x.phi(i),
            CrystalElement::T(t) => t.phi(i),
            CrystalElement::Tensor(v) if v.is_empty() => ExtInt::Finite(0),
            CrystalElement::Tensor(v) => Self::tensor_signature(v, i).phi(),
            CrystalElement::Aff(a) => a.phi(i),
            CrystalElement::Path(p) => p.phi(i),
        }
    }

    fn raise(&self, i: Color) -> Option<Self> {
        self.act(i, Dir::Raise)
    }

    fn lower(&self, i: Color) -> Option<Self> {
        self.act(i, Dir::Lower)
    }

    fn act(&self, i: Color, dir: Dir) -> Option<Self> {
        Some(match self {
            CrystalElement::Trivial | CrystalElement::T(_) => return None,
            CrystalElement::Spin(s) => CrystalElement::Spin(s.act(i, dir)?),
            CrystalElement::Spins(s) => CrystalElement::Spins(s.act(i, dir)?),
            CrystalElement::BInf(x) => CrystalElement::BInf(x.act(i, dir)?),
            CrystalElement::Tensor(v) => CrystalElement::Tensor(tensor_op(i, dir, v)?),
            CrystalElement::Aff(a) => CrystalElement::Aff(Box::new(a.act(i, dir)?)),
            CrystalElement::Path(p) => CrystalElement::Path(p.act(i, dir)?),
        })
    }
}

impl fmt::Display for CrystalElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CrystalElement::Trivial => write!(f, "{Trivial}"),
            CrystalElement::Spin(s) => write!(f, "{s}"),
            CrystalElement::Spins(s) => write!(f, "{s}"),
            CrystalElement::BInf(x) => write!(f, "{x}"),
            CrystalElement::T(t) => write!(f, "{t}"),
            CrystalElement::Tensor(v) => {
                let parts: Vec<String> = v.iter().map(|b| b.to_string()).collect();
                write!(f, "{}", parts.join("⊗"))
            }
            CrystalElement::Aff(a) => write!(f, "{a}"),
            CrystalElement::Path(p) => write!(f, "{p}"),
        }
    }
}

//! Built-in hyperfields, product hypervector spaces and the small-order
//! census.

pub mod canonical;
pub mod census;

use std::fmt;
use std::str::FromStr;

use crate::axioms::{check_hyperfield, check_hypervectorspace, ActionTable, Distributivity, HyperVectorSpace, Hyperfield};
use crate::error::{Error, Result};
use crate::set::IndexSet;
use crate::table::{Carrier, HyperTable, MulTable};

/// Names of the built-in hyperfields.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Builtin {
    /// Krasner hyperfield `{0, 1}` with `1 + 1 = {0, 1}`.
    K2,
    /// Sign hyperfield `{0, 1, -1}`: `x + x = {x}`, `1 + -1 = {0, 1, -1}`.
    S3,
    /// The prime field `GF(p)` with singleton sums.
    Gf(u32),
}

impl fmt::Display for Builtin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Builtin::K2 => f.write_str("K2"),
            Builtin::S3 => f.write_str("S3"),
            Builtin::Gf(p) => write!(f, "GF{p}"),
        }
    }
}

impl FromStr for Builtin {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "K2" => Ok(Builtin::K2),
            "S3" => Ok(Builtin::S3),
            _ => {
                let digits = s.strip_prefix("GFp(").and_then(|r| r.strip_suffix(')')).or_else(|| s.strip_prefix("GF"));
                digits
                    .and_then(|d| d.parse().ok())
                    .map(Builtin::Gf)
                    .ok_or_else(|| Error::UnknownStructure(s.to_string()))
            }
        }
    }
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Builds and validates one of the built-in hyperfields.
pub fn builtin_hyperfield(name: Builtin) -> Result<Hyperfield> {
    let (carrier, add, mul, one) = match name {
        Builtin::K2 => {
            let c = Carrier::numbered(2);
            let add = HyperTable::from_fn(c.clone(), |a, b| match (a, b) {
                (1, 1) => IndexSet::full(2),
                _ => IndexSet::singleton(2, a ^ b),
            })?;
            let mul = MulTable::from_fn(c.clone(), |a, b| a & b)?;
            (c, add, mul, 1)
        }
        Builtin::S3 => {
            // index 2 is -1
            let c = Carrier::new(["0", "1", "-1"])?;
            let add = HyperTable::from_fn(c.clone(), |a, b| match (a, b) {
                (0, x) | (x, 0) => IndexSet::singleton(3, x),
                (x, y) if x == y => IndexSet::singleton(3, x),
                _ => IndexSet::full(3),
            })?;
            let mul = MulTable::from_fn(c.clone(), |a, b| match (a, b) {
                (0, _) | (_, 0) => 0,
                (x, y) if x == y => 1,
                _ => 2,
            })?;
            (c, add, mul, 1)
        }
        Builtin::Gf(p) => {
            if !is_prime(p) || p > 7 {
                return Err(Error::Precondition(format!("GFp needs a prime p <= 7, got {p}")));
            }
            let p = p as usize;
            let c = Carrier::numbered(p);
            let add = HyperTable::from_fn(c.clone(), |a, b| IndexSet::singleton(p, (a + b) % p))?;
            let mul = MulTable::from_fn(c.clone(), |a, b| (a * b) % p)?;
            (c, add, mul, 1)
        }
    };
    debug_assert_eq!(carrier.len(), add.order());
    check_hyperfield(&add, &mul, 0, one, Distributivity::Equal)
        .map_err(|r| Error::Precondition(format!("built-in {name} failed validation:\n{r}")))
}

/// Largest number of vectors a product space may have.
pub const PRODUCT_GUARD: usize = 343;

/// `F^n` with componentwise hyperaddition and `a*(x1..xn) = {(a.x1, .., a.xn)}`.
///
/// Vector `(c1, .., cn)` has index `c1 + c2*|F| + ..`; the first coordinate
/// varies fastest.
#[derive(Clone, Debug)]
pub struct ProductSpace {
    pub space: HyperVectorSpace,
    pub n: usize,
}

impl ProductSpace {
    pub fn coords(&self, v: usize) -> Vec<usize> {
        let q = self.space.field().order();
        (0..self.n).map(|i| (v / q.pow(i as u32)) % q).collect()
    }

    pub fn index_of(&self, coords: &[usize]) -> usize {
        let q = self.space.field().order();
        coords.iter().rev().fold(0, |acc, &c| acc * q + c)
    }

    /// Vectors vanishing outside the coordinate positions in `mask`.
    pub fn coordinate_subspace(&self, mask: &[usize]) -> IndexSet {
        let zero = self.space.field().zero();
        IndexSet::from_indices(
            self.space.dim_v(),
            (0..self.space.dim_v()).filter(|&v| {
                self.coords(v).iter().enumerate().all(|(i, &c)| c == zero || mask.contains(&i))
            }),
        )
    }
}

fn vector_names(field: &Hyperfield, n: usize) -> Vec<String> {
    let fc = field.carrier();
    let q = field.order();
    let compact = fc.names().iter().all(|s| s.chars().count() == 1);
    (0..q.pow(n as u32))
        .map(|v| {
            let parts: Vec<&str> = (0..n).map(|i| fc.name((v / q.pow(i as u32)) % q)).collect();
            if compact {
                format!("v{}", parts.concat())
            } else {
                format!("v{}", parts.join("_"))
            }
        })
        .collect()
}

/// Builds and validates `F^n`.
pub fn product_space(field: &Hyperfield, n: usize) -> Result<ProductSpace> {
    let q = field.order();
    let size = (n >= 1).then(|| q.checked_pow(n as u32)).flatten();
    let size = match size {
        Some(s) if s <= PRODUCT_GUARD && n <= 3 => s,
        _ => {
            return Err(Error::SizeGuard(format!(
                "product space of dimension {n} over a field of order {q}; need 1 <= n <= 3 and |F|^n <= {PRODUCT_GUARD}"
            )))
        }
    };
    let carrier = Carrier::new(vector_names(field, n))?;
    let coord = |v: usize, i: usize| (v / q.pow(i as u32)) % q;
    let index = |cs: &[usize]| cs.iter().rev().fold(0, |acc, &c| acc * q + c);

    let vadd = HyperTable::from_fn(carrier, |x, y| {
        // cartesian product of the coordinate sums
        let mut acc: Vec<Vec<usize>> = vec![vec![]];
        for i in 0..n {
            let sum = field.plus(coord(x, i), coord(y, i));
            acc = acc
                .into_iter()
                .flat_map(|pre| {
                    sum.iter().map(move |c| {
                        let mut p = pre.clone();
                        p.push(c);
                        p
                    })
                })
                .collect();
        }
        IndexSet::from_indices(size, acc.iter().map(|cs| index(cs)))
    })?;
    let action = ActionTable::from_fn(q, size, |a, x| {
        let cs: Vec<usize> = (0..n).map(|i| field.times(a, coord(x, i))).collect();
        IndexSet::singleton(size, index(&cs))
    })?;
    let space = check_hypervectorspace(field, &vadd, &action, 0)
        .map_err(|r| Error::Precondition(format!("product space failed validation:\n{r}")))?;
    Ok(ProductSpace { space, n })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::check_subspace;

    #[test]
    fn builtins_validate() {
        let k2 = builtin_hyperfield(Builtin::K2).unwrap();
        assert_eq!(k2.plus(1, 1).to_vec(), vec![0, 1]);
        assert!(!k2.is_classical());
        let gf2 = builtin_hyperfield(Builtin::Gf(2)).unwrap();
        assert!(gf2.is_classical());
        assert_eq!(gf2.plus(1, 1).to_vec(), vec![0]);
        let s3 = builtin_hyperfield(Builtin::S3).unwrap();
        assert_eq!(s3.order(), 3);
        assert_eq!(s3.neg(1), 2);
        assert_eq!(s3.inv(2), Some(2));
        for p in [3, 5, 7] {
            assert!(builtin_hyperfield(Builtin::Gf(p)).unwrap().is_classical());
        }
    }

    #[test]
    fn builtin_errors() {
        assert!(builtin_hyperfield(Builtin::Gf(4)).is_err());
        assert!(builtin_hyperfield(Builtin::Gf(11)).is_err());
        assert!("K3".parse::<Builtin>().is_err());
        assert_eq!("GFp(3)".parse::<Builtin>().unwrap(), Builtin::Gf(3));
        assert_eq!("GF5".parse::<Builtin>().unwrap(), Builtin::Gf(5));
    }

    #[test]
    fn k2_squared_is_strongly_right_but_not_strongly_left() {
        let k2 = builtin_hyperfield(Builtin::K2).unwrap();
        let v = product_space(&k2, 2).unwrap();
        assert_eq!(v.space.dim_v(), 4);
        let names: Vec<&str> = v.space.vectors().names().iter().map(String::as_str).collect();
        assert_eq!(names, ["v00", "v10", "v01", "v11"]);
        let class = v.space.class();
        assert!(class.strong_right);
        // (1+1)*(1,1) = {(0,0),(1,1)} while (1,1)#(1,1) is all of V
        assert!(!class.strong_left);
        assert!(!class.good);
        let v11 = v.index_of(&[1, 1]);
        let lhs = v.space.action().scalars_act(k2.plus(1, 1), v11);
        let rhs = v.space.vadd().get(v11, v11);
        assert_eq!(lhs.len(), 2);
        assert_eq!(rhs.len(), 4);
    }

    #[test]
    fn one_dimensional_and_classical_products_are_good() {
        for b in [Builtin::K2, Builtin::S3, Builtin::Gf(2), Builtin::Gf(3)] {
            let f = builtin_hyperfield(b).unwrap();
            assert!(product_space(&f, 1).unwrap().space.class().good, "{b}^1");
            for n in 2..=3 {
                let class = product_space(&f, n).unwrap().space.class();
                assert!(class.strong_right, "{b}^{n}");
                assert_eq!(class.strong_left, f.is_classical(), "{b}^{n}");
            }
        }
    }

    #[test]
    fn product_guard() {
        let gf7 = builtin_hyperfield(Builtin::Gf(7)).unwrap();
        assert_eq!(product_space(&gf7, 3).unwrap().space.dim_v(), 343);
        assert!(matches!(product_space(&gf7, 4), Err(Error::SizeGuard(_))));
        assert!(matches!(product_space(&gf7, 0), Err(Error::SizeGuard(_))));
    }

    #[test]
    fn coordinate_subspaces() {
        let k2 = builtin_hyperfield(Builtin::K2).unwrap();
        let v = product_space(&k2, 2).unwrap();
        let axis = v.coordinate_subspace(&[0]);
        assert_eq!(axis.to_vec(), vec![v.index_of(&[0, 0]), v.index_of(&[1, 0])]);
        assert!(check_subspace(&v.space, &axis).unwrap().is_subspace());
        assert_eq!(v.coordinate_subspace(&[]), v.space.theta_set());
        assert_eq!(v.coordinate_subspace(&[0, 1]), v.space.all_vectors());
    }

    #[test]
    fn product_with_vector_coordinates_roundtrip() {
        let s3 = builtin_hyperfield(Builtin::S3).unwrap();
        let v = product_space(&s3, 2).unwrap();
        for x in 0..v.space.dim_v() {
            assert_eq!(v.index_of(&v.coords(x)), x);
        }
        assert_eq!(v.space.vectors().name(v.index_of(&[2, 1])), "v-1_1");
    }
}

use std::collections::BTreeMap;
use std::sync::Arc;

use mv_core::FiniteMvAlgebra;
use mv_ideals::IdealFin;

use crate::error::NullError;

const SIZE_CAP: u128 = 128;

/// A subalgebra of `chain(denom)^X` for a finite point set `X`: each
/// function is a vector of chain indices (`value i` means `i/denom`),
/// and the whole carrier doubles as a [`FiniteMvAlgebra`] through `view`,
/// so all the ideal machinery applies unchanged.
#[derive(Debug, Clone)]
pub struct FiniteFunctionAlgebra {
    points: usize,
    denom: u32,
    funcs: Vec<Vec<u32>>,
    index: BTreeMap<Vec<u32>, usize>,
    view: Arc<FiniteMvAlgebra>,
}

impl FiniteFunctionAlgebra {
    /// The full function algebra `chain(denom)^X`.
    pub fn full(points: usize, denom: u32) -> Result<Self, NullError> {
        if points == 0 || points > 8 {
            return Err(NullError::Internal("need 1..=8 points".into()));
        }
        let size = ((denom as u128) + 1).pow(points as u32);
        if size > SIZE_CAP {
            return Err(NullError::ResourceLimit { size, bound: SIZE_CAP });
        }
        let mut funcs = Vec::with_capacity(size as usize);
        let mut cur = vec![0u32; points];
        loop {
            funcs.push(cur.clone());
            let mut pos = points;
            loop {
                if pos == 0 {
                    return Self::from_closed_funcs(points, denom, funcs);
                }
                pos -= 1;
                if cur[pos] < denom {
                    cur[pos] += 1;
                    break;
                }
                cur[pos] = 0;
            }
        }
    }

    /// The constant functions: a subalgebra isomorphic to `chain(denom)`,
    /// deliberately non-separating once there are two points.
    pub fn constants(points: usize, denom: u32) -> Result<Self, NullError> {
        let funcs = (0..=denom).map(|v| vec![v; points]).collect();
        Self::from_closed_funcs(points, denom, funcs)
    }

    /// The subalgebra generated by `gens`: closure under `⊕` and `¬`
    /// starting from the zero function.
    pub fn from_generators(
        points: usize,
        denom: u32,
        gens: &[Vec<u32>],
    ) -> Result<Self, NullError> {
        for g in gens {
            if g.len() != points || g.iter().any(|&v| v > denom) {
                return Err(NullError::Internal("generator out of range".into()));
            }
        }
        let mut seen: BTreeMap<Vec<u32>, ()> = BTreeMap::new();
        seen.insert(vec![0; points], ());
        for g in gens {
            seen.insert(g.clone(), ());
        }
        loop {
            let snapshot: Vec<Vec<u32>> = seen.keys().cloned().collect();
            let before = seen.len();
            for f in &snapshot {
                let neg: Vec<u32> = f.iter().map(|&v| denom - v).collect();
                seen.insert(neg, ());
                for g in &snapshot {
                    let sum: Vec<u32> =
                        f.iter().zip(g).map(|(&a, &b)| (a + b).min(denom)).collect();
                    seen.insert(sum, ());
                    if seen.len() as u128 > SIZE_CAP {
                        return Err(NullError::ResourceLimit {
                            size: seen.len() as u128,
                            bound: SIZE_CAP,
                        });
                    }
                }
            }
            if seen.len() == before {
                break;
            }
        }
        Self::from_closed_funcs(points, denom, seen.into_keys().collect())
    }

    fn from_closed_funcs(
        points: usize,
        denom: u32,
        mut funcs: Vec<Vec<u32>>,
    ) -> Result<Self, NullError> {
        funcs.sort();
        funcs.dedup();
        let size = funcs.len();
        if size as u128 > SIZE_CAP {
            return Err(NullError::ResourceLimit { size: size as u128, bound: SIZE_CAP });
        }
        let index: BTreeMap<Vec<u32>, usize> =
            funcs.iter().cloned().enumerate().map(|(i, f)| (f, i)).collect();
        let lookup = |f: &Vec<u32>| -> Result<usize, NullError> {
            index
                .get(f)
                .copied()
                .ok_or_else(|| NullError::Internal("carrier not closed under the operations".into()))
        };
        let mut oplus = vec![vec![0usize; size]; size];
        for i in 0..size {
            for j in 0..size {
                let sum: Vec<u32> = funcs[i]
                    .iter()
                    .zip(&funcs[j])
                    .map(|(&a, &b)| (a + b).min(denom))
                    .collect();
                oplus[i][j] = lookup(&sum)?;
            }
        }
        let mut neg = Vec::with_capacity(size);
        for f in &funcs {
            neg.push(lookup(&f.iter().map(|&v| denom - v).collect())?);
        }
        let zero = lookup(&vec![0; points])?;
        let view = Arc::new(FiniteMvAlgebra::from_tables(size, oplus, neg, zero)?);
        Ok(Self { points, denom, funcs, index, view })
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn denom(&self) -> u32 {
        self.denom
    }

    pub fn size(&self) -> usize {
        self.funcs.len()
    }

    /// The index-based algebra over the same carrier.
    pub fn view(&self) -> &Arc<FiniteMvAlgebra> {
        &self.view
    }

    pub fn func(&self, i: usize) -> &[u32] {
        &self.funcs[i]
    }

    pub fn find(&self, f: &[u32]) -> Option<usize> {
        self.index.get(f).copied()
    }

    pub fn label(&self, i: usize) -> String {
        let parts: Vec<String> = self.funcs[i]
            .iter()
            .map(|&v| {
                if self.denom == 1 || v == 0 {
                    format!("{v}")
                } else if v == self.denom {
                    "1".into()
                } else {
                    format!("{v}/{}", self.denom)
                }
            })
            .collect();
        format!("({})", parts.join(","))
    }

    /// All subsets of the (discrete, hence all-closed) point set.
    pub fn all_point_sets(&self) -> impl Iterator<Item = u32> {
        0..(1u32 << self.points)
    }

    pub fn all_points(&self) -> u32 {
        (1u32 << self.points) - 1
    }

    /// `V(I)`: the common zero locus, as a point bitset.
    pub fn v_of(&self, ideal: &IdealFin) -> u32 {
        let mut set = self.all_points();
        for i in ideal.members() {
            for (p, &v) in self.funcs[i].iter().enumerate() {
                if v != 0 {
                    set &= !(1 << p);
                }
            }
        }
        set
    }

    /// `J(S)`: the functions vanishing on `S`. Always an ideal.
    pub fn j_of(&self, set: u32) -> IdealFin {
        let mut bits: u128 = 0;
        for (i, f) in self.funcs.iter().enumerate() {
            let vanishes = (0..self.points).all(|p| set & 1 << p == 0 || f[p] == 0);
            if vanishes {
                bits |= 1 << i;
            }
        }
        IdealFin::new(Arc::clone(&self.view), bits).expect("vanishing sets are ideals")
    }

    /// The restriction algebra `A|_S` on the points of `set`.
    pub fn restriction(&self, set: u32) -> Result<FiniteFunctionAlgebra, NullError> {
        let kept: Vec<usize> = (0..self.points).filter(|&p| set & 1 << p != 0).collect();
        if kept.is_empty() {
            return Err(NullError::Internal("restriction to the empty set".into()));
        }
        let restricted: Vec<Vec<u32>> = self
            .funcs
            .iter()
            .map(|f| kept.iter().map(|&p| f[p]).collect())
            .collect();
        Self::from_closed_funcs(kept.len(), self.denom, restricted)
    }
}

//! Monomials and tensor words: the canonical C-basis of the algebra.

use std::cmp::Ordering;
use std::collections::BTreeMap;

/// A monomial in the context's variables, stored sparsely by variable index.
/// No zero exponents are stored; the empty map is the monomial 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: BTreeMap<u32, u32>,
}

impl Monomial {
    pub fn one() -> Monomial {
        Monomial::default()
    }

    pub fn var(index: u32) -> Monomial {
        Monomial::var_pow(index, 1)
    }

    pub fn var_pow(index: u32, exp: u32) -> Monomial {
        let mut exps = BTreeMap::new();
        if exp > 0 {
            exps.insert(index, exp);
        }
        Monomial { exps }
    }

    pub fn from_pairs<I: IntoIterator<Item = (u32, u32)>>(iter: I) -> Monomial {
        let mut m = Monomial::one();
        for (v, e) in iter {
            if e > 0 {
                *m.exps.entry(v).or_insert(0) += e;
            }
        }
        m
    }

    pub fn from_dense(exps: &[u32]) -> Monomial {
        Monomial::from_pairs(exps.iter().enumerate().map(|(i, e)| (i as u32, *e)))
    }

    pub fn to_dense(&self, num_vars: usize) -> Vec<u32> {
        let mut v = vec![0u32; num_vars];
        for (i, e) in &self.exps {
            v[*i as usize] = *e;
        }
        v
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, index: u32) -> u32 {
        self.exps.get(&index).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.exps.iter().map(|(v, e)| (*v, *e))
    }

    pub fn total_degree(&self) -> usize {
        self.exps.values().map(|e| *e as usize).sum()
    }

    pub fn max_var_index(&self) -> Option<u32> {
        self.exps.keys().next_back().copied()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps.clone();
        for (v, e) in &other.exps {
            *exps.entry(*v).or_insert(0) += e;
        }
        Monomial { exps }
    }
}

// Graded order: total degree first, then the sparse exponent maps.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A basis tensor word w_0 (x) w_1 (x) ... (x) w_m with m >= 0.
///
/// `tensor_degree` is the number of factors minus one; words of tensor
/// degree 0 are the scalar slot of the algebra.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TensorWord {
    factors: Vec<Monomial>,
}

impl TensorWord {
    /// Panics if `factors` is empty; words always have at least one factor.
    pub fn new(factors: Vec<Monomial>) -> TensorWord {
        assert!(!factors.is_empty(), "a tensor word has at least one factor");
        TensorWord { factors }
    }

    /// The word 1 (x) ... (x) 1 with `tensor_degree + 1` factors.
    pub fn unit_power(tensor_degree: usize) -> TensorWord {
        TensorWord::new(vec![Monomial::one(); tensor_degree + 1])
    }

    /// The multiplicative identity: the single factor 1.
    pub fn one() -> TensorWord {
        TensorWord::unit_power(0)
    }

    pub fn factors(&self) -> &[Monomial] {
        &self.factors
    }

    pub fn tensor_degree(&self) -> usize {
        self.factors.len() - 1
    }

    pub fn total_degree(&self) -> usize {
        self.factors.iter().map(|f| f.total_degree()).sum()
    }

    pub fn is_unit_power(&self) -> bool {
        self.factors.iter().all(|f| f.is_one())
    }

    /// Prepend a factor 1 (the Baxter operator on basis words).
    pub fn baxter_shift(&self) -> TensorWord {
        let mut factors = Vec::with_capacity(self.factors.len() + 1);
        factors.push(Monomial::one());
        factors.extend(self.factors.iter().cloned());
        TensorWord::new(factors)
    }
}

// Term order: tensor degree ascending, then factorwise monomial order.
impl Ord for TensorWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.factors
            .len()
            .cmp(&other.factors.len())
            .then_with(|| self.factors.cmp(&other.factors))
    }
}

impl PartialOrd for TensorWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

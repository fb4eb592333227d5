//! Tensor products with finite-dimensional modules by the Brauer–Klimyk
//! rule: V_λ ⊗ W = Σ_{μ ∈ wt(W)} det(w)·V_{w(λ+μ+ρ)−ρ}.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::liedata::{reflect_to_dominant, weyl_rho, RootType};
use crate::rational::{q, Q};

pub type WeightMultiset = BTreeMap<Vec<Q>, i64>;

/// Weights of the standard representation of so(2r+1) (B) or so(2r) (D).
pub fn vector_weights(r: usize, rt: RootType) -> Vec<Vec<Q>> {
    let mut out = Vec::new();
    for j in 0..r {
        for s in [1, -1] {
            let mut v = vec![Q::zero(); r];
            v[j] = q(s);
            out.push(v);
        }
    }
    if rt == RootType::B {
        out.push(vec![Q::zero(); r]);
    }
    out
}

/// Weights of Λ^p of a module with the given basis weights.
pub fn exterior_power(basis: &[Vec<Q>], p: usize) -> WeightMultiset {
    let r = basis.first().map_or(0, |v| v.len());
    let mut out = WeightMultiset::new();
    let mut choose = |sel: &[usize]| {
        let mut w = vec![Q::zero(); r];
        for &i in sel {
            for (a, b) in w.iter_mut().zip(&basis[i]) {
                *a += b;
            }
        }
        *out.entry(w).or_insert(0) += 1;
    };
    fn rec(start: usize, left: usize, n: usize, sel: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if left == 0 {
            f(sel);
            return;
        }
        for i in start..=n - left {
            sel.push(i);
            rec(i + 1, left - 1, n, sel, f);
            sel.pop();
        }
    }
    if p <= basis.len() {
        rec(0, p, basis.len(), &mut Vec::new(), &mut choose);
    }
    out
}

/// Irreducible constituents of V_λ ⊗ W with multiplicities.
pub fn tensor_decompose(highest: &[Q], module: &WeightMultiset, rt: RootType) -> WeightMultiset {
    let rho = weyl_rho(highest.len(), rt);
    let mut out = WeightMultiset::new();
    for (mu, mult) in module {
        let x: Vec<Q> = highest.iter().zip(mu).zip(&rho).map(|((a, b), c)| a + b + c).collect();
        if let Some((y, sign)) = reflect_to_dominant(&x, rt) {
            let hw: Vec<Q> = y.iter().zip(&rho).map(|(a, b)| a - b).collect();
            *out.entry(hw).or_insert(0) += sign as i64 * mult;
        }
    }
    out.retain(|_, v| *v != 0);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clebsch_gordan_su2() {
        // spin 1 ⊗ spin 1 = 0 + 1 + 2 for B_1
        let w: WeightMultiset = vector_weights(1, RootType::B).into_iter().map(|v| (v, 1)).collect();
        let d = tensor_decompose(&[q(1)], &w, RootType::B);
        let expect: WeightMultiset = [(vec![q(0)], 1), (vec![q(1)], 1), (vec![q(2)], 1)].into_iter().collect();
        assert_eq!(d, expect);
    }

    #[test]
    fn exterior_dimensions() {
        let b = vector_weights(2, RootType::B);
        let total: Vec<i64> = (0..=5).map(|p| exterior_power(&b, p).values().sum()).collect();
        assert_eq!(total, vec![1, 5, 10, 10, 5, 1]);
    }

    #[test]
    fn vector_squared_d3() {
        // so(6): V⊗V = Λ²V + S²_0 V + 1 with highest weights (1,1,0), (2,0,0), 0
        let w: WeightMultiset = vector_weights(3, RootType::D).into_iter().map(|v| (v, 1)).collect();
        let d = tensor_decompose(&[q(1), q(0), q(0)], &w, RootType::D);
        let keys: Vec<Vec<Q>> = d.keys().cloned().collect();
        assert_eq!(keys, vec![vec![q(0), q(0), q(0)], vec![q(1), q(1), q(0)], vec![q(2), q(0), q(0)]]);
        assert!(d.values().all(|&v| v == 1));
    }
}

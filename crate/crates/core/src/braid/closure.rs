//! Dimension of the unital algebra generated by a set of block-diagonal
//! matrices, by multiply-and-reduce over exact linear algebra.

use std::collections::VecDeque;

use crate::exact::{EchelonBasis, Matrix, Scalar};

/// A block-diagonal matrix stored as its diagonal blocks.
pub type Blocks<T> = Vec<Matrix<T>>;

fn flatten<T: Scalar>(x: &Blocks<T>) -> Vec<T> {
    x.iter().flat_map(|b| b.entries().iter().cloned()).collect()
}

fn block_mul<T: Scalar>(x: &Blocks<T>, y: &Blocks<T>) -> Blocks<T> {
    x.iter().zip(y).map(|(a, b)| a * b).collect()
}

/// `dim span{words in seeds}` where the span is closed under right
/// multiplication by `gens`. The identity is always included.
pub fn algebra_dimension<T: Scalar>(sizes: &[usize], seeds: &[Blocks<T>], gens: &[Blocks<T>]) -> usize {
    let ambient: usize = sizes.iter().map(|m| m * m).sum();
    let mut basis = EchelonBasis::<T>::new(ambient);
    let mut queue = VecDeque::new();
    let identity: Blocks<T> = sizes.iter().map(|&m| Matrix::identity(m)).collect();
    for x in std::iter::once(identity).chain(seeds.iter().cloned()) {
        if basis.insert(&flatten(&x)) {
            queue.push_back(x);
        }
    }
    while let Some(x) = queue.pop_front() {
        if basis.rank() == ambient {
            break;
        }
        for g in gens {
            let y = block_mul(&x, g);
            if basis.insert(&flatten(&y)) {
                queue.push_back(y);
            }
        }
    }
    basis.rank()
}

use std::sync::{Arc, LazyLock};

use super::x_spec;
use crate::cache::Memo;
use crate::linalg::solve;
use crate::partitions::{partitions_of, Partition};
use crate::polyengine::MPoly;
use crate::scalar::RatQT;
use crate::symfunc::{apply_pi, inner_product_qt, monomial_func, PiMap, PiVariant, SymFuncP};

static GRAM: LazyLock<Memo<usize, Arc<Vec<Vec<RatQT>>>>> = LazyLock::new(Memo::new);
static MACDONALD: LazyLock<Memo<Partition, SymFuncP>> = LazyLock::new(Memo::new);

/// `⟨m_μ, m_ν⟩_{q,t}` over the partitions of `d`, in `partitions_of(d)` order.
fn gram(d: usize) -> Arc<Vec<Vec<RatQT>>> {
    GRAM.get_or_insert_with(&d, || {
        let ms: Vec<SymFuncP> = partitions_of(d).iter().map(monomial_func).collect();
        let mut g = vec![vec![RatQT::zero(); ms.len()]; ms.len()];
        for i in 0..ms.len() {
            for j in i..ms.len() {
                let v = inner_product_qt(&ms[i], &ms[j]);
                g[j][i] = v.clone();
                g[i][j] = v;
            }
        }
        Arc::new(g)
    })
}

/// The Macdonald function `M_λ(·; q, t) = m_λ + Σ_{μ<λ} c_μ m_μ`, orthogonal to
/// every `m_μ` strictly below `λ` in dominance order.
pub fn macdonald_func(lambda: &Partition) -> SymFuncP {
    MACDONALD.get_or_insert_with(lambda, || {
        let d = lambda.size();
        let parts = partitions_of(d);
        let idx = |p: &Partition| parts.iter().position(|x| x == p).unwrap();
        let below: Vec<&Partition> = parts
            .iter()
            .filter(|mu| *mu != lambda && mu.dominated_by(lambda))
            .collect();
        let g = gram(d);
        let li = idx(lambda);
        let a: Vec<Vec<RatQT>> = below
            .iter()
            .map(|mu| below.iter().map(|rho| g[idx(mu)][idx(rho)].clone()).collect())
            .collect();
        let b: Vec<RatQT> = below.iter().map(|mu| g[idx(mu)][li].neg()).collect();
        let c = solve(&a, &b).expect("Gram matrix of a dominance ideal is nonsingular");
        let mut out = monomial_func(lambda);
        for (mu, cm) in below.iter().zip(&c) {
            out = out.add(&monomial_func(mu).scale(cm));
        }
        out
    })
}

/// `M_λ(x_1..x_n; q, t)`.
pub fn macdonald_poly(lambda: &Partition, n: usize) -> MPoly {
    if lambda.len() > n {
        return MPoly::zero(&x_spec(n));
    }
    apply_pi(&PiMap::new(PiVariant::Plain, n), &macdonald_func(lambda))
}

/// The dual element `M_λ / ⟨M_λ, M_λ⟩_{q,t}`.
pub fn macdonald_dual_func(lambda: &Partition) -> SymFuncP {
    let m = macdonald_func(lambda);
    let norm = inner_product_qt(&m, &m);
    m.scale(&norm.inv().expect("nonzero norm"))
}

pub(crate) fn clear_memos() {
    GRAM.clear();
    MACDONALD.clear();
}

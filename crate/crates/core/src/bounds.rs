//! Closed-form lower bounds guaranteed by each extractor. All logarithms are
//! base 2 unless the name says otherwise. Values below the range where the
//! formula is defined come back as `f64::NEG_INFINITY`.

fn log2_or_neg_inf(x: f64) -> f64 {
    if x > 0.0 {
        x.log2()
    } else {
        f64::NEG_INFINITY
    }
}

/// `log(n-k-1) / (k log k)` for a k-tree holding an n-vertex path.
pub fn ktree(n: usize, k: usize) -> f64 {
    log2_or_neg_inf(n as f64 - k as f64 - 1.0) / (k as f64 * (k as f64).log2())
}

/// `log(n-3) / 2` for a 2-connected partial 2-tree holding an n-vertex path.
pub fn partial_2tree(n: usize) -> f64 {
    log2_or_neg_inf(n as f64 - 3.0) / 2.0
}

/// `log(n) / 2` for a 2-connected outerplanar graph on n vertices.
pub fn outerplanar(n: usize) -> f64 {
    log2_or_neg_inf(n as f64) / 2.0
}

/// `(log n - log log n) / 2`, the small-block-count bracelet branch.
pub fn bracelet_few_blocks(n: usize) -> f64 {
    let l = log2_or_neg_inf(n as f64);
    (l - log2_or_neg_inf(l)) / 2.0
}

/// `log n`, the many-blocks bracelet branch.
pub fn bracelet_many_blocks(n: usize) -> f64 {
    log2_or_neg_inf(n as f64)
}

/// `alpha (log n)^beta`: threshold on the block count and the guarantee of
/// the block-chain branch when composing over blocks.
pub fn blocks_threshold(n: usize, alpha: f64, beta: f64) -> f64 {
    let l = log2_or_neg_inf(n as f64);
    if l <= 0.0 {
        0.0
    } else {
        alpha * l.powf(beta)
    }
}

/// `alpha (log n - log(alpha (log n)^beta))^beta`, the single-block branch.
pub fn blocks_single_branch(n: usize, alpha: f64, beta: f64) -> f64 {
    let t = blocks_threshold(n, alpha, beta);
    let inner = log2_or_neg_inf(n as f64) - log2_or_neg_inf(t);
    if inner.is_nan() || inner <= 0.0 {
        f64::NEG_INFINITY
    } else {
        alpha * inner.powf(beta)
    }
}

fn factorial(k: usize) -> f64 {
    (1..=k).map(|x| x as f64).product()
}

/// `f1(n,k) = log_{k+2}(n / (k+2)!)`.
pub fn interval_f1(n: usize, k: usize) -> f64 {
    let base = (k + 2) as f64;
    log2_or_neg_inf(n as f64 / factorial(k + 2)) / base.log2()
}

/// `f2(n,k) = n^{1/(k-1)}`.
pub fn interval_f2(n: usize, k: usize) -> f64 {
    if k < 2 {
        return n as f64;
    }
    (n as f64).powf(1.0 / (k as f64 - 1.0))
}

/// `f3(n,k) = (n/k)^{1/(k-1)}`.
pub fn interval_f3(n: usize, k: usize) -> f64 {
    if k < 2 {
        return n as f64;
    }
    (n as f64 / k as f64).powf(1.0 / (k as f64 - 1.0))
}

/// Composed interval guarantee
/// `((log_{k+2} n - log_{k+2} (k+2)!)^{1/(k-1)} / k)^{1/(k-1)}`.
pub fn interval_pipeline(n: usize, k: usize) -> f64 {
    if k < 2 {
        return n.min(1) as f64;
    }
    let f1 = interval_f1(n, k);
    if f1.is_nan() || f1 <= 0.0 {
        return f64::NEG_INFINITY;
    }
    let e = 1.0 / (k as f64 - 1.0);
    (f1.powf(e) / k as f64).powf(e)
}

/// True when an integer size meets a real-valued lower bound.
pub fn meets(size: usize, bound: f64) -> bool {
    bound.is_nan() || size as f64 >= bound - 1e-9
}

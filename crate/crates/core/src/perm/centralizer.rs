use super::{Perm, PermGroup};

/// Product of `r` disjoint `n`-cycles on consecutive blocks:
/// `(1,…,n)(n+1,…,2n)⋯((r-1)n+1,…,rn)`.
pub fn make_pi(n: usize, r: usize) -> Perm {
    assert!(n >= 1 && r >= 1, "make_pi needs n, r >= 1");
    let images: Vec<u32> = (0..n * r)
        .map(|i| {
            let (block, k) = (i / n, i % n);
            (block * n + (k + 1) % n) as u32
        })
        .collect();
    Perm::from_images0(images)
}

/// Centralizer of [`make_pi`]`(n, r)` in the symmetric group on `n·r` points.
///
/// It is the wreath product `C_n ≀ S_r` of order `n^r · r!`, generated by the
/// block cycles together with the swaps of adjacent blocks.
pub fn centralizer_of_pi(n: usize, r: usize) -> PermGroup {
    let degree = n * r;
    let mut gens = Vec::new();
    if n > 1 {
        for block in 0..r {
            let images: Vec<u32> = (0..degree)
                .map(|i| {
                    if i / n == block {
                        (block * n + (i % n + 1) % n) as u32
                    } else {
                        i as u32
                    }
                })
                .collect();
            gens.push(Perm::from_images0(images));
        }
    }
    for block in 0..r.saturating_sub(1) {
        let images: Vec<u32> = (0..degree)
            .map(|i| match i / n {
                b if b == block => (i + n) as u32,
                b if b == block + 1 => (i - n) as u32,
                _ => i as u32,
            })
            .collect();
        gens.push(Perm::from_images0(images));
    }
    PermGroup::new(degree, gens).expect("generators share the degree")
}

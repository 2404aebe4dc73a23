//! Exact volumes of lattice polytopes `conv(points) ⊂ R^d` for `d ≤ 3`.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;

/// `vol(conv(points))`, or `None` when `dim > 3`.
pub fn convex_hull_volume(points: &[Vec<i64>], dim: usize) -> Option<BigRational> {
    let mut pts: Vec<Vec<i64>> = points.to_vec();
    pts.sort_unstable();
    pts.dedup();
    let twice_or_six = match dim {
        1 => {
            let lo = pts.iter().map(|p| p[0]).min();
            let hi = pts.iter().map(|p| p[0]).max();
            return Some(BigRational::from_integer(BigInt::from(hi.zip(lo).map_or(0, |(h, l)| h - l))));
        }
        2 => (polygon_twice_area(&pts.iter().map(|p| [p[0], p[1]]).collect::<Vec<_>>()), 2),
        3 => (polytope_six_volume(&pts.iter().map(|p| [p[0], p[1], p[2]]).collect::<Vec<_>>()), 6),
        _ => return None,
    };
    Some(BigRational::new(BigInt::from(twice_or_six.0), BigInt::from(twice_or_six.1)))
}

fn cross2(o: [i64; 2], a: [i64; 2], b: [i64; 2]) -> i128 {
    let (ax, ay) = (i128::from(a[0] - o[0]), i128::from(a[1] - o[1]));
    let (bx, by) = (i128::from(b[0] - o[0]), i128::from(b[1] - o[1]));
    ax * by - ay * bx
}

/// Indices of the convex hull vertices in counterclockwise order, collinear
/// boundary points dropped.
fn hull_2d(pts: &[[i64; 2]]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..pts.len()).collect();
    idx.sort_by_key(|&i| pts[i]);
    idx.dedup_by_key(|i| pts[*i]);
    if idx.len() < 3 {
        return idx;
    }
    let mut hull: Vec<usize> = Vec::with_capacity(2 * idx.len());
    for pass in 0..2 {
        let start = hull.len();
        let iter: Vec<usize> = if pass == 0 { idx.clone() } else { idx.iter().rev().copied().collect() };
        for i in iter {
            while hull.len() >= start + 2
                && cross2(pts[hull[hull.len() - 2]], pts[hull[hull.len() - 1]], pts[i]) <= 0
            {
                hull.pop();
            }
            hull.push(i);
        }
        hull.pop();
    }
    hull
}

fn polygon_twice_area(pts: &[[i64; 2]]) -> i128 {
    let h = hull_2d(pts);
    if h.len() < 3 {
        return 0;
    }
    let o = pts[h[0]];
    h.windows(2).skip(1).map(|w| cross2(o, pts[w[0]], pts[w[1]])).sum()
}

fn sub3(a: [i64; 3], b: [i64; 3]) -> [i128; 3] {
    [i128::from(a[0] - b[0]), i128::from(a[1] - b[1]), i128::from(a[2] - b[2])]
}

fn cross3(u: [i128; 3], v: [i128; 3]) -> [i128; 3] {
    [u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]]
}

fn dot3(u: [i128; 3], v: [i128; 3]) -> i128 {
    u[0] * v[0] + u[1] * v[1] + u[2] * v[2]
}

/// `6·vol` by enumerating supporting planes through point triples and fanning
/// each facet polygon from a fixed hull vertex.
fn polytope_six_volume(pts: &[[i64; 3]]) -> i128 {
    let n = pts.len();
    if n < 4 {
        return 0;
    }
    let mut facets: Vec<([i128; 3], i128)> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let normal = cross3(sub3(pts[j], pts[i]), sub3(pts[k], pts[i]));
                if normal == [0, 0, 0] {
                    continue;
                }
                let (mut pos, mut neg) = (false, false);
                for p in pts {
                    let s = dot3(normal, sub3(*p, pts[i]));
                    pos |= s > 0;
                    neg |= s < 0;
                }
                if !pos && !neg {
                    return 0; // every point on one plane
                }
                if pos && neg {
                    continue;
                }
                let mut normal = if pos { normal.map(|c| -c) } else { normal };
                let g = normal.iter().fold(0i128, |g, &c| g.gcd(&c));
                normal = normal.map(|c| c / g);
                let offset = dot3(normal, pts[i].map(i128::from));
                if !facets.contains(&(normal, offset)) {
                    facets.push((normal, offset));
                }
            }
        }
    }
    let apex = *pts.iter().min().expect("n ≥ 4");
    let mut six = 0i128;
    for (normal, offset) in facets {
        if dot3(normal, apex.map(i128::from)) == offset {
            continue;
        }
        let on: Vec<[i64; 3]> = pts.iter().copied().filter(|p| dot3(normal, p.map(i128::from)) == offset).collect();
        let drop = (0..3).max_by_key(|&c| normal[c].abs()).expect("three axes");
        let proj: Vec<[i64; 2]> = on
            .iter()
            .map(|p| {
                let mut q = [0; 2];
                let mut t = 0;
                for (c, &v) in p.iter().enumerate() {
                    if c != drop {
                        q[t] = v;
                        t += 1;
                    }
                }
                q
            })
            .collect();
        let ring = hull_2d(&proj);
        for w in ring.windows(2).skip(1) {
            let det = dot3(sub3(on[ring[0]], apex), cross3(sub3(on[w[0]], apex), sub3(on[w[1]], apex)));
            six += det.abs();
        }
    }
    six
}

/// `t(x, y) = a*x + b*y + c`
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AffineMap {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl AffineMap {
    pub fn new(a: f64, b: f64, c: f64) -> Self {
        AffineMap { a, b, c }
    }

    pub fn eval(&self, x: f64, y: f64) -> f64 {
        self.a * x + self.b * y + self.c
    }

    pub fn is_left_projection(&self) -> bool {
        (self.a, self.b, self.c) == (1.0, 0.0, 0.0)
    }

    pub fn is_right_projection(&self) -> bool {
        (self.a, self.b, self.c) == (0.0, 1.0, 0.0)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AffineEntry {
    pub map: AffineMap,
    pub associative: bool,
    pub commutative: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AffineReport {
    pub entries: Vec<AffineEntry>,
}

impl AffineReport {
    /// Maps found associative but not commutative.
    pub fn associative_non_commutative(&self) -> Vec<AffineMap> {
        self.entries
            .iter()
            .filter(|e| e.associative && !e.commutative)
            .map(|e| e.map)
            .collect()
    }

    /// True when every associative, non-commutative map is a projection.
    pub fn only_projections(&self) -> bool {
        self.associative_non_commutative()
            .iter()
            .all(|m| m.is_left_projection() || m.is_right_projection())
    }
}

/// Fixed evaluation points; includes 0, negatives and non-integers.
const SAMPLE: [f64; 7] = [-2.5, -1.0, 0.0, 0.5, 1.0, 3.0, 7.25];

fn close(u: f64, v: f64) -> bool {
    (u - v).abs() <= 1e-9 * u.abs().max(v.abs()).max(1.0)
}

/// Tests each affine map for associativity and commutativity on a fixed
/// sample of reals. Only the two projections should come out associative and
/// non-commutative.
pub fn check_affine_projection_claim(grid: &[AffineMap]) -> AffineReport {
    let entries = grid
        .iter()
        .map(|&map| {
            let associative = SAMPLE.iter().all(|&x| {
                SAMPLE.iter().all(|&y| {
                    SAMPLE
                        .iter()
                        .all(|&z| close(map.eval(map.eval(x, y), z), map.eval(x, map.eval(y, z))))
                })
            });
            let commutative = SAMPLE.iter().all(|&x| {
                SAMPLE
                    .iter()
                    .all(|&y| close(map.eval(x, y), map.eval(y, x)))
            });
            AffineEntry {
                map,
                associative,
                commutative,
            }
        })
        .collect();
    AffineReport { entries }
}

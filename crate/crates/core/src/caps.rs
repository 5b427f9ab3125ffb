use crate::error::{Error, Result};

/// Environment variable that overrides the order caps of the exact solvers.
pub const MAX_ORDER_ENV: &str = "ZF_MAX_ORDER";

/// Hard ceiling for the subset DP; `2^order` bytes of state.
pub const PATH_COVER_HARD_LIMIT: usize = 24;

/// Desk-scale limits for the exponential parts of the library.
///
/// The defaults keep every exhaustive audit in the minutes range on a
/// laptop. [`Caps::from_env`] applies `ZF_MAX_ORDER` to the three
/// order-based solver caps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Largest graph order accepted by the exact zero forcing search.
    pub exact_order: usize,
    /// Largest graph order for the path cover subset DP.
    pub path_cover_order: usize,
    /// Largest graph order for listing every minimum zero forcing set.
    pub minimum_sets_order: usize,
    /// Largest order for enumerating all `n^n` vertex functions.
    pub all_functions_order: usize,
    /// Largest order for enumerating all `n!` permutations.
    pub permutations_order: usize,
    /// Largest Cartesian product order the product audit solves exactly.
    pub product_order: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            exact_order: 64,
            path_cover_order: 16,
            minimum_sets_order: 16,
            all_functions_order: 6,
            permutations_order: 8,
            product_order: 20,
        }
    }
}

impl Caps {
    pub fn from_env() -> Result<Self> {
        let mut caps = Caps::default();
        if let Ok(raw) = std::env::var(MAX_ORDER_ENV) {
            let order: usize = raw
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("{MAX_ORDER_ENV}={raw:?} is not an integer")))?;
            caps = caps.with_max_order(order);
        }
        Ok(caps)
    }

    /// Overrides the order caps of the exact solvers.
    pub fn with_max_order(mut self, order: usize) -> Self {
        self.exact_order = order;
        self.path_cover_order = order.min(PATH_COVER_HARD_LIMIT);
        self.minimum_sets_order = order;
        self.product_order = order;
        self
    }

    pub(crate) fn check(what: &'static str, order: usize, cap: usize) -> Result<()> {
        if order > cap {
            Err(Error::CapExceeded { what, order, cap })
        } else {
            Ok(())
        }
    }
}

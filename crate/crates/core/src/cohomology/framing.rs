use std::collections::BTreeMap;
use std::sync::Arc;

use crate::scalar::{q, qi, Q};

/// A trivialization of the one-dimensional degree-0 cohomology, given by
/// the number it assigns to `[∫F₊∧F₊]`.
pub trait Framing: Send + Sync {
    fn name(&self) -> &'static str;

    /// Image of `[∫F₊∧F₊]`.
    fn factor(&self) -> Q;

    fn description(&self) -> &'static str;
}

/// Normalized by the first-order action, which represents `½[FF]`.
pub struct ActionFraming;

/// `[∫F₊∧F₊] ↦ 1`.
pub struct SelfDualFraming;

impl Framing for ActionFraming {
    fn name(&self) -> &'static str {
        "action"
    }

    fn factor(&self) -> Q {
        q(1, 2)
    }

    fn description(&self) -> &'static str {
        "first-order action S(A,B) = ∫B∧F₊ - ½∫B∧B"
    }
}

impl Framing for SelfDualFraming {
    fn name(&self) -> &'static str {
        "ff"
    }

    fn factor(&self) -> Q {
        qi(1)
    }

    fn description(&self) -> &'static str {
        "∫F₊∧F₊"
    }
}

pub type FramingRegistry = BTreeMap<&'static str, Arc<dyn Framing>>;

pub fn build_framings() -> FramingRegistry {
    let mut m: FramingRegistry = BTreeMap::new();
    m.insert("action", Arc::new(ActionFraming));
    m.insert("ff", Arc::new(SelfDualFraming));
    m
}

pub const DEFAULT_FRAMING: &str = "action";

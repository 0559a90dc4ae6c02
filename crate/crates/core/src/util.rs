use std::fmt::Display;

use serde::Serializer;

/// Serializes exact numbers through their decimal `Display` form.
pub(crate) fn as_string<T: Display, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

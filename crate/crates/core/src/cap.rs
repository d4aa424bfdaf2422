use crate::error::{Error, Result};

/// Budget for exhaustive enumerations, expressed as a bit count: an
/// operation may walk at most `2^bits` elements (codewords, cosets, or
/// subsets). Exceeding the cap is a reported error, never a silent
/// truncation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumCap {
    bits: u32,
}

impl EnumCap {
    pub const DEFAULT_BITS: u32 = 28;

    /// Hard ceiling; table-backed strategies index `2^bits` entries in
    /// memory, which stops being desk-scale well before this.
    pub const MAX_BITS: u32 = 30;

    pub fn new(bits: u32) -> Result<Self> {
        if bits > Self::MAX_BITS {
            return Err(Error::Invalid(format!(
                "cap of 2^{bits} exceeds the supported maximum 2^{}",
                Self::MAX_BITS
            )));
        }
        Ok(EnumCap { bits })
    }

    pub fn bits(self) -> u32 {
        self.bits
    }

    /// Checks that an enumeration of `2^needed_bits` elements fits.
    pub fn ensure(self, needed_bits: usize, strategy: &'static str) -> Result<()> {
        if needed_bits as u32 > self.bits {
            return Err(Error::CapExceeded {
                strategy,
                needed_bits: needed_bits as u32,
                cap_bits: self.bits,
            });
        }
        Ok(())
    }
}

impl Default for EnumCap {
    fn default() -> Self {
        EnumCap {
            bits: Self::DEFAULT_BITS,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_cap_is_28_bits() {
        assert_eq!(EnumCap::default().bits(), 28);
    }

    #[test]
    fn ensure_reports_strategy() {
        let cap = EnumCap::new(4).unwrap();
        assert!(cap.ensure(4, "x").is_ok());
        let err = cap.ensure(5, "codeword-enumeration").unwrap_err();
        match err {
            Error::CapExceeded { strategy, .. } => assert_eq!(strategy, "codeword-enumeration"),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn rejects_absurd_caps() {
        assert!(EnumCap::new(31).is_err());
    }
}

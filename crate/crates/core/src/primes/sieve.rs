use crate::error::{Error, Result};

/// Largest sieve limit accepted by [`build_sieve`].
pub const SIEVE_LIMIT_GUARD: u64 = 1_000_000_000;

/// Eratosthenes table over `0..=limit`.
///
/// Compositeness is stored one bit per integer. `cumulative_pi[w]` holds the
/// number of primes below `64 * w`, so `π(n)` is a lookup plus one popcount.
#[derive(Debug, Clone)]
pub struct PrimeTable {
    limit: u64,
    is_composite: Vec<u64>,
    cumulative_pi: Vec<u64>,
}

impl PrimeTable {
    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// Primality of `n`, or `None` past the table limit.
    pub fn is_prime(&self, n: u64) -> Option<bool> {
        (n <= self.limit).then(|| !self.composite_bit(n))
    }

    /// Number of primes `≤ n`.
    pub fn pi(&self, n: u64) -> Result<u64> {
        if n > self.limit {
            return Err(Error::BeyondTable {
                n,
                limit: self.limit,
            });
        }
        let word = (n / 64) as usize;
        let bit = n % 64;
        // Primes are the zero bits; count those at positions 0..=bit.
        let mask = if bit == 63 {
            u64::MAX
        } else {
            (1u64 << (bit + 1)) - 1
        };
        let in_word = (!self.is_composite[word] & mask).count_ones() as u64;
        Ok(self.cumulative_pi[word] + in_word)
    }

    /// All primes `≤ limit`, ascending.
    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        (0..=self.limit).filter(|&n| !self.composite_bit(n))
    }

    #[inline]
    fn composite_bit(&self, n: u64) -> bool {
        self.is_composite[(n / 64) as usize] >> (n % 64) & 1 == 1
    }
}

/// Sieve of Eratosthenes up to and including `limit`.
pub fn build_sieve(limit: u64) -> Result<PrimeTable> {
    if limit > SIEVE_LIMIT_GUARD {
        return Err(Error::GuardExceeded {
            what: "sieve limit",
            value: limit,
            limit: SIEVE_LIMIT_GUARD,
        });
    }
    let words = (limit / 64 + 1) as usize;
    let mut bits = vec![0u64; words];
    let set = |bits: &mut [u64], n: u64| bits[(n / 64) as usize] |= 1 << (n % 64);

    set(&mut bits, 0);
    if limit >= 1 {
        set(&mut bits, 1);
    }
    let mut p = 2u64;
    while p * p <= limit {
        if bits[(p / 64) as usize] >> (p % 64) & 1 == 0 {
            let mut m = p * p;
            while m <= limit {
                set(&mut bits, m);
                m += p;
            }
        }
        p += 1;
    }
    // Positions past `limit` in the last word are marked composite so the
    // popcount never sees them.
    let tail = limit % 64;
    if tail != 63 {
        bits[words - 1] |= !((1u64 << (tail + 1)) - 1);
    }

    let mut cumulative_pi = Vec::with_capacity(words);
    let mut running = 0u64;
    for w in &bits {
        cumulative_pi.push(running);
        running += (!w).count_ones() as u64;
    }

    Ok(PrimeTable {
        limit,
        is_composite: bits,
        cumulative_pi,
    })
}

/// `π(n)` read from a prebuilt table.
pub fn pi_of(n: u64, table: &PrimeTable) -> Result<u64> {
    table.pi(n)
}

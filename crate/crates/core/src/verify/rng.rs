use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Keyed family of independent ChaCha8 streams.
///
/// The base seed fixes the key; work item `i` draws from stream `i`. Streams
/// share no state, so any work item can be replayed on any thread.
#[derive(Debug, Clone)]
pub struct StreamRng {
    keyed: ChaCha8Rng,
}

impl StreamRng {
    pub fn new(seed: u64) -> Self {
        StreamRng {
            keyed: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn stream(&self, index: u64) -> ChaCha8Rng {
        let mut rng = self.keyed.clone();
        rng.set_stream(index);
        rng
    }
}

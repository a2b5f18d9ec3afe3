use steiner_core::*;
fn main() {
    let t = std::time::Instant::now();
    let config = PipelineConfig::new(Variant::D7, Field::Rationals, 42);
    match run_pipeline(&config) {
        Ok(r) => println!("D7/Q {:.1}s degrees={:?} smooth={}", t.elapsed().as_secs_f64(), r.generator_degrees, r.cubic_smooth),
        Err(e) => println!("D7/Q failed after {:.1}s: {e}", t.elapsed().as_secs_f64()),
    }
}

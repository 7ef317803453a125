//! Temporal partitions with change points: layers 25, 50 and 75 do not copy from
//! their predecessor, so adjacent-layer NMI drops to chance there.

use multinet::io::load_config;
use multinet::metrics::nmi_joint;

fn main() -> multinet::Result<()> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/configs/change_points.toml");
    let config = load_config(path.as_ref())?;
    let (_, partitions) = config.sample_partitions()?;
    let s = &partitions[0];
    let l = s.shape().layer_count();
    let adjacent: Vec<f64> = (1..l)
        .map(|b| nmi_joint(s.induced(b - 1), s.induced(b)))
        .collect::<multinet::Result<_>>()?;
    for (k, v) in adjacent.iter().enumerate() {
        let layer = k + 2;
        let bar = "#".repeat((v * 40.0).round() as usize);
        let mark = if layer % 25 == 0 { " <- change point" } else { "" };
        if layer % 5 == 0 || !mark.is_empty() || layer % 25 == 1 {
            println!("{:>3} vs {:>3}  {v:.3} {bar}{mark}", layer - 1, layer);
        }
    }
    Ok(())
}

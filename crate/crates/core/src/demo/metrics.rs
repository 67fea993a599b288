use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Metric {
    pub size: u32,
    pub align: u32,
}

const fn m(size: u32, align: u32) -> Metric {
    Metric { size, align }
}

/// Sizes and alignments of the basic C types on a target.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TargetMetrics {
    pub char_: Metric,
    pub short: Metric,
    pub int: Metric,
    pub long: Metric,
    pub float: Metric,
    pub double: Metric,
    pub pointer: Metric,
    pub little_endian: bool,
}

impl TargetMetrics {
    pub const ILP32: TargetMetrics = TargetMetrics {
        char_: m(1, 1),
        short: m(2, 2),
        int: m(4, 4),
        long: m(4, 4),
        float: m(4, 4),
        double: m(8, 4),
        pointer: m(4, 4),
        little_endian: true,
    };

    pub const LP64: TargetMetrics = TargetMetrics {
        char_: m(1, 1),
        short: m(2, 2),
        int: m(4, 4),
        long: m(8, 8),
        float: m(4, 4),
        double: m(8, 8),
        pointer: m(8, 8),
        little_endian: true,
    };

    /// `"32"` or `"64"`.
    pub fn named(name: &str) -> Option<TargetMetrics> {
        match name {
            "32" => Some(TargetMetrics::ILP32),
            "64" => Some(TargetMetrics::LP64),
            _ => None,
        }
    }

    fn entries(&self) -> [(&'static str, Metric); 7] {
        [
            ("char", self.char_),
            ("short", self.short),
            ("int", self.int),
            ("long", self.long),
            ("float", self.float),
            ("double", self.double),
            ("pointer", self.pointer),
        ]
    }

    /// Inverse of the `Display` form, e.g.
    /// `char=1:1,short=2:2,int=4:4,long=4:4,float=4:4,double=8:4,pointer=4:4,little`.
    pub fn parse(text: &str) -> Option<TargetMetrics> {
        let parts: Vec<&str> = text.split(',').collect();
        let [char_, short, int, long, float, double, pointer, order] = parts[..] else {
            return None;
        };
        let metric = |part: &str, key: &str| -> Option<Metric> {
            let (k, v) = part.split_once('=')?;
            let (size, align) = v.split_once(':')?;
            let metric = m(size.parse().ok()?, align.parse().ok()?);
            (k == key && metric.align.is_power_of_two() && metric.align <= metric.size).then_some(metric)
        };
        Some(TargetMetrics {
            char_: metric(char_, "char")?,
            short: metric(short, "short")?,
            int: metric(int, "int")?,
            long: metric(long, "long")?,
            float: metric(float, "float")?,
            double: metric(double, "double")?,
            pointer: metric(pointer, "pointer")?,
            little_endian: match order {
                "little" => true,
                "big" => false,
                _ => return None,
            },
        })
    }
}

impl Default for TargetMetrics {
    fn default() -> Self {
        TargetMetrics::ILP32
    }
}

impl fmt::Display for TargetMetrics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, metric) in self.entries() {
            write!(f, "{name}={}:{},", metric.size, metric.align)?;
        }
        f.write_str(if self.little_endian { "little" } else { "big" })
    }
}

//! Indexed triangle mesh with per-corner texture coordinates.

use nalgebra::{Point2, Point3};

/// A triangle with indices into the position and texcoord pools.
///
/// A face is either fully mapped (all three corners carry a texcoord index)
/// or unmapped; mixed faces are demoted to unmapped at parse time.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Face {
    pub positions: [u32; 3],
    pub texcoords: Option<[u32; 3]>,
    pub material: Option<u32>,
}

/// A material as referenced from the model, with its diffuse texture and any
/// auxiliary maps (normal, roughness, ...) inventoried by name only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaterialRef {
    pub name: String,
    pub diffuse_texture: Option<String>,
    pub auxiliary_textures: Vec<String>,
    /// Index into the resolved texture-unit table, filled during analysis.
    pub texture_unit: Option<usize>,
}

impl MaterialRef {
    pub fn new(name: impl Into<String>) -> Self {
        MaterialRef {
            name: name.into(),
            diffuse_texture: None,
            auxiliary_textures: Vec::new(),
            texture_unit: None,
        }
    }
}

/// Indexed triangle mesh: position and texcoord pools plus triangle faces.
#[derive(Debug, Clone, Default)]
pub struct TexturedMesh {
    pub positions: Vec<Point3<f64>>,
    pub texcoords: Vec<Point2<f64>>,
    pub faces: Vec<Face>,
    pub materials: Vec<MaterialRef>,
}

impl TexturedMesh {
    pub fn face_positions(&self, face: &Face) -> [Point3<f64>; 3] {
        [
            self.positions[face.positions[0] as usize],
            self.positions[face.positions[1] as usize],
            self.positions[face.positions[2] as usize],
        ]
    }

    /// Texture coordinates of a mapped face; `None` for unmapped faces.
    pub fn face_texcoords(&self, face: &Face) -> Option<[Point2<f64>; 3]> {
        face.texcoords.map(|t| {
            [
                self.texcoords[t[0] as usize],
                self.texcoords[t[1] as usize],
                self.texcoords[t[2] as usize],
            ]
        })
    }

    pub fn area_3d(&self, face: &Face) -> f64 {
        let [a, b, c] = self.face_positions(face);
        triangle_area_3d(&a, &b, &c)
    }

    /// Signed UV area; `None` for unmapped faces. Positive when the UV
    /// corners wind counter-clockwise.
    pub fn uv_area_signed(&self, face: &Face) -> Option<f64> {
        self.face_texcoords(face)
            .map(|[a, b, c]| triangle_area_uv_signed(&a, &b, &c))
    }

    pub fn is_mapped(&self, face: &Face) -> bool {
        face.texcoords.is_some()
    }

    pub fn mapped_face_count(&self) -> usize {
        self.faces.iter().filter(|f| f.texcoords.is_some()).count()
    }

    /// Diagonal of the axis-aligned bounding box of all positions.
    pub fn bounding_box_diagonal(&self) -> f64 {
        let mut min = [f64::INFINITY; 3];
        let mut max = [f64::NEG_INFINITY; 3];
        for p in &self.positions {
            for k in 0..3 {
                min[k] = min[k].min(p[k]);
                max[k] = max[k].max(p[k]);
            }
        }
        if self.positions.is_empty() {
            return 0.0;
        }
        let mut sq = 0.0;
        for k in 0..3 {
            let d = max[k] - min[k];
            sq += d * d;
        }
        sq.sqrt()
    }

    /// Absolute 3D area below which a face counts as zero-area for this mesh.
    pub fn zero_area_threshold(&self) -> f64 {
        let d = self.bounding_box_diagonal();
        crate::AREA_EPSILON * d * d
    }

    /// Total unsigned 3D surface area.
    pub fn surface_area(&self) -> f64 {
        self.faces.iter().map(|f| self.area_3d(f)).sum()
    }
}

pub fn triangle_area_3d(a: &Point3<f64>, b: &Point3<f64>, c: &Point3<f64>) -> f64 {
    0.5 * (b - a).cross(&(c - a)).norm()
}

pub fn triangle_area_uv_signed(a: &Point2<f64>, b: &Point2<f64>, c: &Point2<f64>) -> f64 {
    let u = b - a;
    let v = c - a;
    0.5 * (u.x * v.y - u.y * v.x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_areas() {
        let a = Point3::new(0.0, 0.0, 0.0);
        let b = Point3::new(2.0, 0.0, 0.0);
        let c = Point3::new(0.0, 2.0, 0.0);
        assert_eq!(triangle_area_3d(&a, &b, &c), 2.0);

        let a = Point2::new(0.0, 0.0);
        let b = Point2::new(1.0, 0.0);
        let c = Point2::new(0.0, 1.0);
        assert_eq!(triangle_area_uv_signed(&a, &b, &c), 0.5);
        assert_eq!(triangle_area_uv_signed(&a, &c, &b), -0.5);
    }

    #[test]
    fn bbox_diagonal_empty_mesh_is_zero() {
        let mesh = TexturedMesh::default();
        assert_eq!(mesh.bounding_box_diagonal(), 0.0);
        assert_eq!(mesh.zero_area_threshold(), 0.0);
    }
}

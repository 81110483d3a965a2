use std::collections::BTreeMap;
use std::fmt;

use rand::seq::index::sample;
use rand::Rng;
use serde::de::Error as _;
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::kneser::{ColorableObjectSet, ObjectKind};

/// Color lists on a set of objects.
///
/// Colors are opaque strings. Internally every color gets an id equal to
/// its position in the sorted palette, so comparing ids compares names.
#[derive(Clone, PartialEq, Eq)]
pub struct ListAssignment {
    objects: ColorableObjectSet,
    palette: Vec<String>,
    lists: Vec<Vec<u32>>,
}

impl ListAssignment {
    /// `lists[i]` is the list of object `i`. Lists must be nonempty and
    /// free of repeats.
    pub fn new(objects: ColorableObjectSet, lists: Vec<Vec<String>>) -> Result<Self> {
        if lists.len() != objects.len() {
            return Err(Error::InvalidLists(format!("{} lists given for {} objects", lists.len(), objects.len())));
        }
        let mut palette: Vec<String> = lists.iter().flatten().cloned().collect();
        palette.sort();
        palette.dedup();
        let id = |c: &String| palette.binary_search(c).expect("color in palette") as u32;
        let mut ids = Vec::with_capacity(lists.len());
        for (i, list) in lists.iter().enumerate() {
            if list.is_empty() {
                return Err(Error::InvalidLists(format!("object {} has an empty list", objects.label(i))));
            }
            let mut l: Vec<u32> = list.iter().map(id).collect();
            l.sort_unstable();
            if l.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidLists(format!("object {} repeats a color", objects.label(i))));
            }
            ids.push(l);
        }
        Ok(Self { objects, palette, lists: ids })
    }

    /// Every object gets the same list.
    pub fn identical<S: AsRef<str>>(objects: ColorableObjectSet, colors: &[S]) -> Result<Self> {
        let list: Vec<String> = colors.iter().map(|c| c.as_ref().to_string()).collect();
        let n = objects.len();
        Self::new(objects, vec![list; n])
    }

    /// Each list is a uniformly random `k`-subset of a palette of size
    /// `palette_size`.
    pub fn random_uniform<R: Rng + ?Sized>(
        objects: ColorableObjectSet,
        k: usize,
        palette_size: usize,
        rng: &mut R,
    ) -> Result<Self> {
        if k == 0 || k > palette_size {
            return Err(Error::InvalidLists(format!("cannot pick {k} of {palette_size} colors")));
        }
        let names = palette_names(palette_size);
        let lists = (0..objects.len())
            .map(|_| sample(rng, palette_size, k).into_iter().map(|i| names[i].clone()).collect())
            .collect();
        Self::new(objects, lists)
    }

    pub fn objects(&self) -> &ColorableObjectSet {
        &self.objects
    }

    pub fn n(&self) -> usize {
        self.objects.n()
    }

    pub fn r(&self) -> usize {
        self.objects.r()
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }

    pub fn palette(&self) -> &[String] {
        &self.palette
    }

    pub fn color_name(&self, id: u32) -> &str {
        &self.palette[id as usize]
    }

    pub fn color_id(&self, name: &str) -> Option<u32> {
        self.palette.binary_search_by(|c| c.as_str().cmp(name)).ok().map(|i| i as u32)
    }

    /// Sorted color ids of object `i`.
    pub fn list(&self, i: usize) -> &[u32] {
        &self.lists[i]
    }

    pub fn lists(&self) -> &[Vec<u32>] {
        &self.lists
    }

    pub fn list_names(&self, i: usize) -> Vec<&str> {
        self.lists[i].iter().map(|&c| self.color_name(c)).collect()
    }

    pub fn contains(&self, i: usize, color: u32) -> bool {
        self.lists[i].binary_search(&color).is_ok()
    }

    /// The common list size, if all lists have the same size.
    pub fn uniform_size(&self) -> Option<usize> {
        let k = self.lists[0].len();
        self.lists.iter().all(|l| l.len() == k).then_some(k)
    }

    /// Validates that every list has exactly `k` colors.
    pub fn require_uniform(&self, k: usize) -> Result<()> {
        match self.lists.iter().position(|l| l.len() != k) {
            None => Ok(()),
            Some(i) => Err(Error::InvalidLists(format!(
                "object {} has {} colors, expected {k}",
                self.objects.label(i),
                self.lists[i].len()
            ))),
        }
    }

    pub fn is_identical(&self) -> bool {
        self.lists.windows(2).all(|w| w[0] == w[1])
    }

    /// Number of colorings drawn from the lists, saturating at `u128::MAX`.
    pub fn coloring_count(&self) -> u128 {
        self.lists.iter().fold(1u128, |acc, l| acc.saturating_mul(l.len() as u128))
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let file: ObjectFile<Vec<String>> = serde_json::from_str(s)?;
        let objects = ColorableObjectSet::new(file.objects, file.n, file.r)?;
        let lists = file.into_values(&objects)?;
        Self::new(objects, lists)
    }
}

impl fmt::Debug for ListAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries((0..self.len()).map(|i| (self.objects.label(i), self.list_names(i)))).finish()
    }
}

/// Short, lexicographically ordered color names for a palette of a given
/// size: `a, b, ...` up to 26 colors, zero-padded `c000, c001, ...` beyond.
pub fn palette_names(size: usize) -> Vec<String> {
    if size <= 26 {
        (0..size).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
    } else {
        (0..size).map(|i| format!("c{i:03}")).collect()
    }
}

/// One color per object.
#[derive(Clone, PartialEq, Eq)]
pub struct Coloring {
    objects: ColorableObjectSet,
    /// Sorted names of the colors actually used.
    palette: Vec<String>,
    colors: Vec<u32>,
}

impl Coloring {
    pub fn new(objects: ColorableObjectSet, colors: Vec<String>) -> Result<Self> {
        if colors.len() != objects.len() {
            return Err(Error::InvalidColoring(format!("{} colors given for {} objects", colors.len(), objects.len())));
        }
        let mut palette = colors.clone();
        palette.sort();
        palette.dedup();
        let ids = colors.iter().map(|c| palette.binary_search(c).expect("color in palette") as u32).collect();
        Ok(Self { objects, palette, colors: ids })
    }

    /// The coloring picking `lists.list(i)[choice[i]]` for every object.
    pub fn from_choice(lists: &ListAssignment, choice: &[usize]) -> Self {
        let ids: Vec<u32> = choice.iter().enumerate().map(|(i, &j)| lists.list(i)[j]).collect();
        Self::from_list_ids(lists, &ids)
    }

    /// The coloring with color id `ids[i]` (from the list palette) on
    /// object `i`.
    pub fn from_list_ids(lists: &ListAssignment, ids: &[u32]) -> Self {
        let names = ids.iter().map(|&c| lists.color_name(c).to_string()).collect();
        Self::new(lists.objects().clone(), names).expect("one color per object")
    }

    pub fn objects(&self) -> &ColorableObjectSet {
        &self.objects
    }

    pub fn n(&self) -> usize {
        self.objects.n()
    }

    pub fn r(&self) -> usize {
        self.objects.r()
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn color(&self, i: usize) -> &str {
        &self.palette[self.colors[i] as usize]
    }

    /// Color ids; equal ids mean equal colors.
    pub fn ids(&self) -> &[u32] {
        &self.colors
    }

    pub fn palette(&self) -> &[String] {
        &self.palette
    }

    /// Objects of each color, indexed like [`Coloring::palette`].
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.palette.len()];
        for (i, &c) in self.colors.iter().enumerate() {
            out[c as usize].push(i);
        }
        out
    }

    /// Checks the coloring is drawn from `lists` on the same objects.
    pub fn check_against(&self, lists: &ListAssignment) -> Result<()> {
        if self.objects != *lists.objects() {
            return Err(Error::InvalidColoring("coloring and lists live on different objects".to_string()));
        }
        for i in 0..self.len() {
            let ok = lists.color_id(self.color(i)).is_some_and(|c| lists.contains(i, c));
            if !ok {
                return Err(Error::InvalidColoring(format!(
                    "object {} has color {:?}, not in its list {:?}",
                    self.objects.label(i),
                    self.color(i),
                    lists.list_names(i)
                )));
            }
        }
        Ok(())
    }

    pub fn respects(&self, lists: &ListAssignment) -> bool {
        self.check_against(lists).is_ok()
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let file: ObjectFile<String> = serde_json::from_str(s)?;
        let objects = ColorableObjectSet::new(file.objects, file.n, file.r)?;
        let colors = file.into_values(&objects)?;
        Self::new(objects, colors)
    }
}

impl fmt::Debug for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries((0..self.len()).map(|i| (self.objects.label(i), self.color(i)))).finish()
    }
}

/// On-disk shape shared by list assignments and colorings.
#[derive(Deserialize)]
struct ObjectFile<V> {
    n: usize,
    r: usize,
    objects: ObjectKind,
    #[serde(alias = "lists", alias = "colors", alias = "coloring")]
    values: BTreeMap<String, V>,
}

impl<V> ObjectFile<V> {
    fn into_values(self, objects: &ColorableObjectSet) -> Result<Vec<V>> {
        let mut slots: Vec<Option<V>> = (0..objects.len()).map(|_| None).collect();
        for (key, v) in self.values {
            let i = objects.parse_label(&key)?;
            if slots[i].replace(v).is_some() {
                return Err(Error::InvalidLists(format!("object {key:?} listed twice")));
            }
        }
        slots
            .into_iter()
            .enumerate()
            .map(|(i, v)| v.ok_or_else(|| Error::InvalidLists(format!("object {} is missing", objects.label(i)))))
            .collect()
    }
}

fn serialize_header<M: SerializeMap>(map: &mut M, objects: &ColorableObjectSet) -> std::result::Result<(), M::Error> {
    map.serialize_entry("n", &objects.n())?;
    map.serialize_entry("r", &objects.r())?;
    map.serialize_entry("objects", &objects.kind())
}

/// Object keys in canonical order, values in the same order.
struct Entries<'a, V: Serialize>(&'a ColorableObjectSet, Vec<V>);

impl<V: Serialize> Serialize for Entries<'_, V> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.1.len()))?;
        for (i, v) in self.1.iter().enumerate() {
            map.serialize_entry(&self.0.label(i), v)?;
        }
        map.end()
    }
}

impl Serialize for ListAssignment {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(4))?;
        serialize_header(&mut map, &self.objects)?;
        let lists: Vec<Vec<&str>> = (0..self.len()).map(|i| self.list_names(i)).collect();
        map.serialize_entry("lists", &Entries(&self.objects, lists))?;
        map.end()
    }
}

impl Serialize for Coloring {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(4))?;
        serialize_header(&mut map, &self.objects)?;
        let colors: Vec<&str> = (0..self.len()).map(|i| self.color(i)).collect();
        map.serialize_entry("colors", &Entries(&self.objects, colors))?;
        map.end()
    }
}

impl<'de> Deserialize<'de> for ListAssignment {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let file: ObjectFile<Vec<String>> = ObjectFile::deserialize(d)?;
        let objects = ColorableObjectSet::new(file.objects, file.n, file.r).map_err(D::Error::custom)?;
        let lists = file.into_values(&objects).map_err(D::Error::custom)?;
        Self::new(objects, lists).map_err(D::Error::custom)
    }
}

impl<'de> Deserialize<'de> for Coloring {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let file: ObjectFile<String> = ObjectFile::deserialize(d)?;
        let objects = ColorableObjectSet::new(file.objects, file.n, file.r).map_err(D::Error::custom)?;
        let colors = file.into_values(&objects).map_err(D::Error::custom)?;
        Self::new(objects, colors).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kneser::edge_view;

    #[test]
    fn json_round_trip() {
        let e = edge_view(4).unwrap();
        let lists: Vec<Vec<String>> = (0..6).map(|i| vec![format!("x{i}"), "b".to_string()]).collect();
        let l = ListAssignment::new(e.clone(), lists).unwrap();
        let s = l.to_json().unwrap();
        assert!(s.contains("\"objects\": \"kn-edges\""));
        let first = s.find("\"1,2\"").unwrap();
        assert!(first < s.find("\"1,3\"").unwrap() && s.find("\"2,3\"").unwrap() < s.find("\"1,4\"").unwrap());
        assert_eq!(ListAssignment::from_json(&s).unwrap(), l);

        let c = Coloring::new(e, (0..6).map(|i| if i % 2 == 0 { "b" } else { "a" }.to_string()).collect()).unwrap();
        let s = c.to_json().unwrap();
        assert_eq!(Coloring::from_json(&s).unwrap(), c);
    }

    #[test]
    fn accepts_documented_input() {
        let s = r#"{"n":4,"r":2,"objects":"k4-edges","lists":{
            "1,2":["a","b"],"1,3":["b","c"],"2,3":["a","c"],
            "1,4":["a","b"],"2,4":["a","b"],"3,4":["b","a"]}}"#;
        let l = ListAssignment::from_json(s).unwrap();
        assert_eq!(l.uniform_size(), Some(2));
        assert_eq!(l.list_names(1), ["b", "c"]);
        assert!(!l.is_identical());
    }

    #[test]
    fn rejects_bad_input() {
        let missing = r#"{"n":4,"r":2,"objects":"kn-edges","lists":{"1,2":["a"]}}"#;
        assert!(ListAssignment::from_json(missing).is_err());
        let e = edge_view(4).unwrap();
        assert!(ListAssignment::new(e.clone(), vec![vec![]; 6]).is_err());
        assert!(ListAssignment::new(e.clone(), vec![vec!["a".into(), "a".into()]; 6]).is_err());
        let l = ListAssignment::identical(e.clone(), &["a", "b"]).unwrap();
        let c = Coloring::new(e, vec!["z".to_string(); 6]).unwrap();
        assert!(c.check_against(&l).is_err());
        assert!(l.require_uniform(3).is_err());
    }

    #[test]
    fn coloring_from_choice() {
        let e = edge_view(4).unwrap();
        let l = ListAssignment::identical(e, &["b", "a"]).unwrap();
        let c = Coloring::from_choice(&l, &[0, 1, 0, 1, 0, 1]);
        assert_eq!(c.color(0), "a");
        assert_eq!(c.color(1), "b");
        assert!(c.respects(&l));
        assert_eq!(c.classes(), vec![vec![0, 2, 4], vec![1, 3, 5]]);
        assert_eq!(l.coloring_count(), 64);
    }
}

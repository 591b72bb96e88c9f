pub mod count;
pub mod poly;
pub mod render;
pub mod table;
pub mod verify;

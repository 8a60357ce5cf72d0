pub mod abstraction;
pub mod classify;
pub mod enumerate;
pub mod search;

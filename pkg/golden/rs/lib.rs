// Code generated by knowforge from the KNOW vocabulary. DO NOT EDIT.

pub mod runtime;
pub mod airport;
pub mod appointment;
pub mod birthday;
pub mod cafe;
pub mod event;
pub mod group;
pub mod holiday;
pub mod hospital;
pub mod hotel;
pub mod landmark;
pub mod meeting;
pub mod organization;
pub mod party;
pub mod person;
pub mod place;
pub mod place_of_worship;
pub mod restaurant;

/// Names of all generated types, sorted.
pub const TYPES: &[&str] = &[
    "Airport",
    "Appointment",
    "Birthday",
    "Cafe",
    "Event",
    "Group",
    "Holiday",
    "Hospital",
    "Hotel",
    "Landmark",
    "Meeting",
    "Organization",
    "Party",
    "Person",
    "Place",
    "PlaceOfWorship",
    "Restaurant",
];

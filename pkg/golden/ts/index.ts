// Code generated by knowforge from the KNOW vocabulary. DO NOT EDIT.

export { Airport, AirportRecord } from "./airport";
export { Appointment, AppointmentRecord } from "./appointment";
export { Birthday, BirthdayRecord } from "./birthday";
export { Cafe, CafeRecord } from "./cafe";
export { Event, EventRecord } from "./event";
export { Group, GroupRecord } from "./group";
export { Holiday, HolidayRecord } from "./holiday";
export { Hospital, HospitalRecord } from "./hospital";
export { Hotel, HotelRecord } from "./hotel";
export { Landmark, LandmarkRecord } from "./landmark";
export { Meeting, MeetingRecord } from "./meeting";
export { Organization, OrganizationRecord } from "./organization";
export { Party, PartyRecord } from "./party";
export { Person, PersonRecord } from "./person";
export { Place, PlaceRecord } from "./place";
export { PlaceOfWorship, PlaceOfWorshipRecord } from "./place-of-worship";
export { Restaurant, RestaurantRecord } from "./restaurant";

export const TYPES = [
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

// Code generated by knowforge from the KNOW vocabulary. DO NOT EDIT.

#ifndef KNOW_H
#define KNOW_H

/* Generated types:
 *   Airport
 *   Appointment
 *   Birthday
 *   Cafe
 *   Event
 *   Group
 *   Holiday
 *   Hospital
 *   Hotel
 *   Landmark
 *   Meeting
 *   Organization
 *   Party
 *   Person
 *   Place
 *   PlaceOfWorship
 *   Restaurant
 */

#include "airport.h"
#include "appointment.h"
#include "birthday.h"
#include "cafe.h"
#include "event.h"
#include "group.h"
#include "holiday.h"
#include "hospital.h"
#include "hotel.h"
#include "landmark.h"
#include "meeting.h"
#include "organization.h"
#include "party.h"
#include "person.h"
#include "place.h"
#include "place_of_worship.h"
#include "restaurant.h"

#endif /* KNOW_H */

// Code generated by knowforge from the KNOW vocabulary. DO NOT EDIT.

#ifndef KNOW_RESTAURANT_H
#define KNOW_RESTAURANT_H

#include <stdbool.h>
#include <stddef.h>

/* Restaurant */
#define KNOW_RESTAURANT_TYPE_IRI "https://know.dev/Restaurant"

typedef struct Restaurant {
    const char *id;
} Restaurant;

#endif /* KNOW_RESTAURANT_H */
